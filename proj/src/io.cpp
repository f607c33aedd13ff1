#include "nsl/io.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <iomanip>
#include <sstream>

namespace nsl::io {

using nlohmann::json;

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

/// Comma-separated integers; `base` is the offset of `text` within the
/// original input, for error positions.
std::vector<Int> parse_int_list(std::string_view text, bool allow_negative, std::size_t base) {
    std::vector<Int> out;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && is_space(text[i])) ++i;
    };
    skip_ws();
    if (i == text.size()) throw Error(ErrorKind::EmptyInput, "empty integer list");
    while (true) {
        skip_ws();
        const std::size_t start = i;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
            if (text[i] == '-' && !allow_negative)
                throw ParseError("negative value not allowed at position " + std::to_string(base + i),
                                 base + i);
            ++i;
        }
        const std::size_t digits = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == digits)
            throw ParseError("expected integer at position " + std::to_string(base + start), base + start);
        Int value = 0;
        const char* first = text.data() + digits;
        auto [ptr, ec] = std::from_chars(first, text.data() + i, value);
        if (ec != std::errc())
            throw ParseError("integer out of range at position " + std::to_string(base + start),
                             base + start);
        if (text[start] == '-') value = -value;
        out.push_back(value);
        skip_ws();
        if (i == text.size()) break;
        if (text[i] != ',')
            throw ParseError("unexpected character '" + std::string(1, text[i]) + "' at position " +
                                 std::to_string(base + i),
                             base + i);
        ++i;
    }
    return out;
}

std::string_view trim(std::string_view s, std::size_t& offset) {
    while (!s.empty() && is_space(s.front())) {
        s.remove_prefix(1);
        ++offset;
    }
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

std::string join(const std::vector<Int>& v, std::string_view sep = ",") {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << sep;
        os << v[i];
    }
    return os.str();
}

std::vector<Int> window_offsets(const RelativeIdeal& I) {
    std::vector<Int> out;
    for (std::size_t o = 0; o < I.window().size(); ++o)
        if (I.window()[o]) out.push_back(static_cast<Int>(o));
    return out;
}

} // namespace

std::vector<Int> parse_semigroup_spec(std::string_view text) {
    auto gens = parse_int_list(text, false, 0);
    for (Int g : gens)
        if (g < 1) throw ParseError("generators must be positive integers", 0);
    return gens;
}

RelativeIdeal parse_ideal_spec(std::string_view text, const SemigroupPtr& S) {
    std::size_t offset = 0;
    std::string_view body = trim(text, offset);
    Int shift = 0;
    if (auto at = body.rfind('@'); at != std::string_view::npos) {
        auto t = parse_int_list(body.substr(at + 1), true, offset + at + 1);
        if (t.size() != 1) throw ParseError("expected a single translation after '@'", offset + at + 1);
        shift = t.front();
        body = body.substr(0, at);
        body = trim(body, offset);
    }
    if (body == "S") body = "0";
    if (body.size() >= 2 && body.substr(body.size() - 2) == "+S") {
        body.remove_suffix(2);
        body = trim(body, offset);
    }
    if (body.size() >= 2 && body.front() == '(' && body.back() == ')') {
        body = body.substr(1, body.size() - 2);
        ++offset;
    }
    auto gens = parse_int_list(body, true, offset);
    return ideal_from_generators(S, gens).translate(shift);
}

std::vector<DualityOp> parse_ops(std::string_view text) {
    std::vector<DualityOp> ops;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        std::size_t off = pos;
        auto name = trim(text.substr(pos, comma - pos), off);
        if (name == "star")
            ops.push_back(DualityOp::Star);
        else if (name == "kdual")
            ops.push_back(DualityOp::KDual);
        else
            throw ParseError("unknown operator '" + std::string(name) + "' (expected star or kdual)", off);
        pos = comma + 1;
    }
    std::sort(ops.begin(), ops.end());
    ops.erase(std::unique(ops.begin(), ops.end()), ops.end());
    return ops;
}

std::string ideal_text(const RelativeIdeal& I) {
    const auto gens = minimal_ideal_generators(I).generators;
    if (gens.size() == 1) {
        const Int g = gens.front();
        if (g == 0) return "S";
        if (g > 0) return std::to_string(g) + "+S";
        return "(" + std::to_string(g) + ")+S";
    }
    return "(" + join(gens) + ")+S";
}

std::string ideal_elements_text(const RelativeIdeal& I) {
    std::vector<Int> elems;
    const Int end = I.min_element() + static_cast<Int>(I.window().size());
    for (Int z = I.min_element(); z <= end; ++z)
        if (I.contains(z)) elems.push_back(z);
    return "{" + join(elems, ", ") + ", ...}";
}

std::string semigroup_text(const NumericalSemigroup& S) {
    return "<" + join(S.minimal_generators()) + ">";
}

json semigroup_json(const NumericalSemigroup& S) {
    return {{"generators", S.minimal_generators()},
            {"frobenius", S.frobenius()},
            {"gaps", S.gaps()},
            {"multiplicity", S.multiplicity()},
            {"symmetric", S.is_symmetric()}};
}

json ideal_json(const RelativeIdeal& I) {
    return {{"min", I.min_element()},
            {"generators", minimal_ideal_generators(I).generators},
            {"window_offsets", window_offsets(I)}};
}

json liaison_json(const LiaisonClassResult& r) {
    json reps = json::array();
    for (const auto& I : r.representatives) reps.push_back(ideal_json(I));
    json j = {{"theory", std::string(to_string(r.theory))},
              {"reflexive", r.reflexive},
              {"collapsed", r.collapsed},
              {"representatives", reps},
              {"linking_ideal", r.linking_ideal ? ideal_json(*r.linking_ideal) : json(nullptr)}};
    if (r.partner) j["partner"] = ideal_json(*r.partner);
    if (r.closure_representative) j["closure_representative"] = ideal_json(*r.closure_representative);
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

json orbit_json(const OrbitGraph& g) {
    json nodes = json::array();
    for (const auto& n : g.nodes) nodes.push_back(ideal_json(n));
    json edges = json::array();
    for (const auto& e : g.edges)
        edges.push_back({{"from", e.from}, {"to", e.to}, {"op", std::string(to_string(e.op))}});
    json ops = json::array();
    for (auto op : g.ops) ops.push_back(std::string(to_string(op)));
    return {{"start", g.start}, {"ops", ops}, {"nodes", nodes}, {"edges", edges}};
}

json report_json(const ClassificationReport& r) {
    auto hist = [](const std::map<std::size_t, std::size_t>& h) {
        json j = json::object();
        for (auto [k, v] : h) j[std::to_string(k)] = v;
        return j;
    };
    json non_refl = json::array();
    for (const auto& I : r.non_k_reflexive) non_refl.push_back(ideal_json(I));
    return {{"semigroup", semigroup_json(*r.semigroup)},
            {"ideal_count", r.ideal_count},
            {"s_reflexive_count", r.s_reflexive_count},
            {"k_reflexive_count", r.k_reflexive_count},
            {"principal_collapsed_count", r.principal_collapsed_count},
            {"canonical_collapsed_count", r.canonical_collapsed_count},
            {"principal_class_histogram", hist(r.principal_class_histogram)},
            {"canonical_class_histogram", hist(r.canonical_class_histogram)},
            {"max_mixed_orbit",
             {{"size", r.max_mixed_orbit},
              {"witness", r.max_mixed_orbit_witness ? ideal_json(*r.max_mixed_orbit_witness) : json(nullptr)}}},
            {"universal_k_reflexivity", r.universal_k_reflexivity()},
            {"non_k_reflexive", non_refl},
            {"canonical_pairs_linked", r.canonical_pairs_linked}};
}

std::string liaison_text(const LiaisonClassResult& r) {
    std::ostringstream os;
    os << "theory:          " << to_string(r.theory) << '\n'
       << "reflexive:       " << (r.reflexive ? "yes" : "no") << '\n'
       << "collapsed:       " << (r.collapsed ? "yes" : "no") << '\n'
       << "class size:      " << r.representatives.size() << '\n'
       << "representatives:";
    for (const auto& I : r.representatives) os << ' ' << ideal_text(I);
    os << '\n' << "linking ideal:   " << (r.linking_ideal ? ideal_text(*r.linking_ideal) : "none") << '\n';
    if (r.partner) os << "partner:         " << ideal_text(*r.partner) << '\n';
    if (r.closure_representative)
        os << "K-closure (nor): " << ideal_text(*r.closure_representative) << '\n';
    if (!r.note.empty()) os << "note:            " << r.note << '\n';
    return os.str();
}

std::string orbit_text(const OrbitGraph& g) {
    std::ostringstream os;
    os << "nodes: " << g.nodes.size() << '\n';
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        os << "  [" << i << "] " << ideal_text(g.nodes[i]);
        for (auto op : g.ops) os << "  " << to_string(op) << "->" << g.image(i, op);
        os << '\n';
    }
    return os.str();
}

std::string orbit_dot(const OrbitGraph& g) {
    std::ostringstream os;
    os << "digraph orbit {\n";
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        os << "  n" << i << " [label=\"" << ideal_text(g.nodes[i]) << "\"";
        if (i == g.start) os << ", shape=box";
        os << "];\n";
    }
    for (const auto& e : g.edges)
        os << "  n" << e.from << " -> n" << e.to << " [label=\"" << to_string(e.op) << "\"];\n";
    os << "}\n";
    return os.str();
}

std::string report_text(const ClassificationReport& r) {
    std::ostringstream os;
    auto row = [&](std::string_view key, const auto& value) {
        os << std::left << std::setw(28) << key << value << '\n';
    };
    auto hist = [](const std::map<std::size_t, std::size_t>& h) {
        std::ostringstream hs;
        bool first = true;
        for (auto [k, v] : h) {
            hs << (first ? "" : "  ") << "size " << k << ": " << v;
            first = false;
        }
        return hs.str();
    };
    const auto& S = *r.semigroup;
    row("semigroup", semigroup_text(S));
    row("frobenius", S.frobenius());
    row("symmetric", S.is_symmetric() ? "yes" : "no");
    row("normalized ideals", r.ideal_count);
    row("S-reflexive", r.s_reflexive_count);
    row("K(S)-reflexive", r.k_reflexive_count);
    row("principal classes", hist(r.principal_class_histogram));
    row("canonical classes", hist(r.canonical_class_histogram));
    row("principal collapsed", r.principal_collapsed_count);
    row("canonical collapsed", r.canonical_collapsed_count);
    row("max mixed orbit", std::to_string(r.max_mixed_orbit) +
                               (r.max_mixed_orbit_witness
                                    ? " (seed " + ideal_text(*r.max_mixed_orbit_witness) + ")"
                                    : std::string{}));
    row("universal K-reflexivity", r.universal_k_reflexivity() ? "yes" : "no");
    row("canonical pairs linked", r.canonical_pairs_linked ? "yes" : "no");
    return os.str();
}

std::vector<PublishedComparison> published_comparison(const SemigroupPtr& S) {
    std::vector<PublishedComparison> rows;
    auto yes_no = [](bool b) { return std::string(b ? "yes" : "no"); };
    auto ideal_row = [&](std::string quantity, std::string published, const RelativeIdeal& computed) {
        const bool agrees = equals(parse_ideal_spec(published, S), computed);
        rows.push_back({std::move(quantity), std::move(published), ideal_text(computed), agrees});
    };
    auto value_row = [&](std::string quantity, std::string published, std::string computed) {
        const bool agrees = published == computed;
        rows.push_back({std::move(quantity), std::move(published), std::move(computed), agrees});
    };
    const auto& gens = S->minimal_generators();
    const RelativeIdeal Sid = principal_ideal(S);
    const RelativeIdeal K = canonical_ideal(S);

    if (gens == std::vector<Int>{5, 6, 8}) {
        value_row("F(S)", "9", std::to_string(S->frobenius()));
        value_row("S symmetric", "no", yes_no(S->is_symmetric()));
        ideal_row("K(S)", "(0,2)+S", K);
        const auto I = ideal_from_generators(S, {0, 1, 3});
        ideal_row("S-((0,1,3)+S)", "5+S", s_dual(I));
        value_row("(0,1,3)+S S-reflexive", "yes", yes_no(is_s_reflexive(I)));
        value_row("(0,2)+S S-reflexive", "no", yes_no(is_s_reflexive(ideal_from_generators(S, {0, 2}))));
        const auto five = Sid.translate(5);
        ideal_row("S-(5+S)", "(-5)+S", s_dual(five));
        ideal_row("S-(S-(5+S))", "5+S", s_biclosure(five));
        ideal_row("S-K(S)", "(6,8,10)+S", s_dual(K));
        ideal_row("S-(S-K(S))", "(0,2,4)+S", s_biclosure(K));
        ideal_row("K(S)-K(S)", "S", k_dual(K));
        ideal_row("K(S)-S", "(0,2)+S", k_dual(Sid));
        const auto cls = canonical_liaison_class(K);
        std::vector<std::string> reps;
        for (const auto& r : cls.representatives) reps.push_back(ideal_text(r));
        std::sort(reps.begin(), reps.end());
        std::string joined;
        for (const auto& r : reps) joined += (joined.empty() ? "" : ", ") + r;
        value_row("canonical class of K(S)", "{(0,2)+S, S}", "{" + joined + "}");
    } else if (gens == std::vector<Int>{7, 9, 10, 12}) {
        value_row("F(S)", "11", std::to_string(S->frobenius()));
        ideal_row("K(S)", "(0,2,3,5)+S", K);
        const auto I = ideal_from_generators(S, {0, 4, 6});
        const auto star = s_dual(I);
        const auto vee = k_closure(I);
        const auto star_vee = k_closure(star);
        const auto vee_star = s_dual(vee);
        ideal_row("I* for I=(0,4,6)+S", "(3,5)+S", star);
        ideal_row("I^v = K-(K-I)", "(1,4,6)+S", vee);
        ideal_row("(I*)^v", "(0,3,5)+S", star_vee);
        ideal_row("(I^v)*", "(2,5)+S", vee_star);
        std::vector<Window> distinct;
        for (const auto* J : {&I, &star, &vee, &star_vee, &vee_star})
            if (std::find(distinct.begin(), distinct.end(), J->window()) == distinct.end())
                distinct.push_back(J->window());
        rows.push_back({"classes among I, I*, I^v, (I*)^v, (I^v)*", ">= 3",
                        std::to_string(distinct.size()), distinct.size() >= 3});
        constexpr std::array ops{DualityOp::Star, DualityOp::KDual};
        const auto orbit = mixed_orbit(I, ops);
        rows.push_back({"mixed orbit size of I", ">= 3", std::to_string(orbit.nodes.size()),
                        orbit.nodes.size() >= 3});
    }
    return rows;
}

std::string comparison_text(const std::vector<PublishedComparison>& rows) {
    std::ostringstream os;
    if (rows.empty()) {
        os << "no published worked examples for this semigroup\n";
        return os.str();
    }
    std::size_t wq = 8, wp = 9, wc = 8;
    for (const auto& r : rows) {
        wq = std::max(wq, r.quantity.size());
        wp = std::max(wp, r.published.size());
        wc = std::max(wc, r.computed.size());
    }
    os << std::left << std::setw(static_cast<int>(wq + 2)) << "quantity" << std::setw(static_cast<int>(wp + 2))
       << "published" << std::setw(static_cast<int>(wc + 2)) << "computed" << "status\n";
    for (const auto& r : rows)
        os << std::left << std::setw(static_cast<int>(wq + 2)) << r.quantity
           << std::setw(static_cast<int>(wp + 2)) << r.published << std::setw(static_cast<int>(wc + 2))
           << r.computed << (r.agrees ? "agrees" : "DIFFERS") << '\n';
    return os.str();
}

json comparison_json(const std::vector<PublishedComparison>& rows) {
    json out = json::array();
    for (const auto& r : rows)
        out.push_back({{"quantity", r.quantity},
                       {"published", r.published},
                       {"computed", r.computed},
                       {"agrees", r.agrees}});
    return out;
}

} // namespace nsl::io
