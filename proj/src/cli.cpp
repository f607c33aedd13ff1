#include "nsl/cli.hpp"

#include <algorithm>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "nsl/classify.hpp"
#include "nsl/duality.hpp"
#include "nsl/io.hpp"
#include "nsl/oracle.hpp"

namespace nsl::cli {

namespace {

using nlohmann::json;

struct Output {
    json j;
    std::string text;
    std::string dot;
};

/// Differential check of main-path results against the brute-force oracle
/// over one explicit range wide enough for every ideal involved.
class OracleCheck {
public:
    OracleCheck(const SemigroupPtr& S, const std::vector<RelativeIdeal>& involved)
        : S_(S), os_(oracle::oracle_semigroup(S->minimal_generators())) {
        const Int width = S->frobenius() + 2;
        Int span = width;
        for (const auto& I : involved) span = std::max(span, std::abs(I.min_element()) + width);
        lo_ = -3 * span;
        hi_ = 3 * span + width;
    }

    const oracle::OracleSemigroup& semigroup() const { return os_; }

    oracle::ExplicitSet explicit_set(const RelativeIdeal& I) const { return oracle::to_explicit(I, lo_, hi_); }
    oracle::ExplicitSet s() const { return oracle::explicit_semigroup(os_, lo_, hi_); }
    oracle::ExplicitSet k() const { return oracle::oracle_canonical(os_, lo_, hi_); }
    oracle::ExplicitSet colon(const oracle::ExplicitSet& H, const oracle::ExplicitSet& K) const {
        return oracle::oracle_colon(H, K, os_);
    }

    void compare(const std::string& what, const RelativeIdeal& main, const oracle::ExplicitSet& ref) {
        ++comparisons_;
        if (!oracle::same_set(main, ref)) {
            std::ostringstream os;
            os << what << ": main " << io::ideal_text(main) << " elements "
               << io::ideal_elements_text(main) << ", oracle elements in range {";
            bool first = true;
            for (Int z : ref.elements()) {
                if (z > main.min_element() + static_cast<Int>(main.window().size()) + 1) break;
                os << (first ? "" : ", ") << z;
                first = false;
            }
            os << ", ...}";
            mismatches_.push_back(os.str());
        }
    }

    template <class T>
    void compare_value(const std::string& what, const T& main, const T& ref) {
        ++comparisons_;
        if (!(main == ref)) {
            std::ostringstream os;
            os << what << ": main " << main << ", oracle " << ref;
            mismatches_.push_back(os.str());
        }
    }

    int finish(std::ostream& err) const {
        if (mismatches_.empty()) {
            err << "check: oracle agrees (" << comparisons_ << " comparisons)\n";
            return kOk;
        }
        for (const auto& m : mismatches_) err << "check: MISMATCH " << m << '\n';
        return kCheckMismatch;
    }

private:
    SemigroupPtr S_;
    oracle::OracleSemigroup os_;
    Int lo_ = 0;
    Int hi_ = 0;
    std::size_t comparisons_ = 0;
    std::vector<std::string> mismatches_;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void require_ideals(const CommandRequest& req, std::size_t n) {
    if (req.ideals.size() != n)
        throw ParseError(req.subcommand + " " + req.action + " expects " + std::to_string(n) +
                             " --ideal value(s), got " + std::to_string(req.ideals.size()),
                         0);
}

std::vector<RelativeIdeal> parse_ideals(const std::vector<std::string>& specs, const SemigroupPtr& S) {
    std::vector<RelativeIdeal> out;
    for (const auto& s : specs) out.push_back(io::parse_ideal_spec(s, S));
    return out;
}

std::string describe_ideal(const RelativeIdeal& I, bool raw) {
    std::string s = io::ideal_text(I);
    if (!I.is_normalized())
        s += "   [= " + std::to_string(I.min_element()) + " + " + io::ideal_text(I.normalize()) + "]";
    if (raw) s += "\n  elements: " + io::ideal_elements_text(I);
    return s;
}

Output run_sgp(const SemigroupPtr& S, OracleCheck* check) {
    Output o;
    o.j = io::semigroup_json(*S);
    std::ostringstream os;
    os << "semigroup:     " << io::semigroup_text(*S) << '\n'
       << "frobenius:     " << S->frobenius() << '\n'
       << "gaps:          {";
    for (std::size_t i = 0; i < S->gaps().size(); ++i) os << (i ? "," : "") << S->gaps()[i];
    os << "}\n"
       << "multiplicity:  " << S->multiplicity() << '\n'
       << "symmetric:     " << yes_no(S->is_symmetric()) << '\n'
       << "apery(" << S->multiplicity() << "):      {";
    const auto apery = S->apery_set(S->multiplicity());
    for (std::size_t i = 0; i < apery.size(); ++i) os << (i ? "," : "") << apery[i];
    os << "}\n"
       << "K(S):          " << io::ideal_text(canonical_ideal(S)) << '\n';
    o.text = os.str();

    if (check) {
        const auto& os_ = check->semigroup();
        check->compare_value("frobenius", S->frobenius(), os_.frobenius);
        check->compare_value("gap count", S->gaps().size(), os_.gaps().size());
        check->compare_value("gaps", S->gaps() == os_.gaps(), true);
        check->compare_value("symmetric", S->is_symmetric(), check->k() == check->s());
        check->compare("K(S)", canonical_ideal(S), check->k());
    }
    return o;
}

Output run_ideal(const CommandRequest& req, const std::vector<RelativeIdeal>& ideals,
                 OracleCheck* check) {
    Output o;
    const std::string& a = req.action;
    auto single = [&](const std::string& label, const RelativeIdeal& result) {
        o.j = io::ideal_json(result);
        o.text = label + ": " + describe_ideal(result, req.raw) + "\n";
    };

    if (a == "colon") {
        require_ideals(req, 2);
        const auto r = colon(ideals[0], ideals[1]);
        single(io::ideal_text(ideals[0]) + " - " + io::ideal_text(ideals[1]), r);
        if (check)
            check->compare("colon", r,
                           check->colon(check->explicit_set(ideals[0]), check->explicit_set(ideals[1])));
    } else if (a == "dual") {
        require_ideals(req, 1);
        const auto r = s_dual(ideals[0]);
        single("S - " + io::ideal_text(ideals[0]), r);
        if (check) check->compare("S-dual", r, check->colon(check->s(), check->explicit_set(ideals[0])));
    } else if (a == "kdual") {
        require_ideals(req, 1);
        const auto r = k_dual(ideals[0]);
        single("K(S) - " + io::ideal_text(ideals[0]), r);
        if (check) check->compare("K-dual", r, check->colon(check->k(), check->explicit_set(ideals[0])));
    } else if (a == "closure") {
        require_ideals(req, 1);
        const auto& I = ideals[0];
        const auto sb = s_biclosure(I);
        const auto kc = k_closure(I);
        o.j = {{"ideal", io::ideal_json(I)},
               {"s_biclosure", io::ideal_json(sb)},
               {"s_reflexive", equals(I, sb)},
               {"k_closure", io::ideal_json(kc)},
               {"k_reflexive", equals(I, kc)}};
        o.text = "ideal:        " + describe_ideal(I, req.raw) + "\n" +
                 "S-(S-I):      " + describe_ideal(sb, req.raw) + "\n" +
                 "S-reflexive:  " + yes_no(equals(I, sb)) + "\n" +
                 "K-(K-I):      " + describe_ideal(kc, req.raw) + "\n" +
                 "K-reflexive:  " + yes_no(equals(I, kc)) + "\n";
        if (check) {
            const auto e = check->explicit_set(I);
            check->compare("S-biclosure", sb, check->colon(check->s(), check->colon(check->s(), e)));
            check->compare("K-closure", kc, check->colon(check->k(), check->colon(check->k(), e)));
        }
    } else if (a == "normalize") {
        require_ideals(req, 1);
        const auto r = ideals[0].normalize();
        single("normalized", r);
        if (check) {
            const auto e = check->explicit_set(ideals[0]);
            check->compare("normalize", r, oracle::shifted(e, -e.minimum(), e.lo, e.hi));
        }
    } else if (a == "gens") {
        require_ideals(req, 1);
        const auto& I = ideals[0];
        const auto g = minimal_ideal_generators(I).generators;
        o.j = io::ideal_json(I);
        std::ostringstream os;
        os << "generators: ";
        for (std::size_t i = 0; i < g.size(); ++i) os << (i ? "," : "") << g[i];
        os << "\nideal:      " << describe_ideal(I, req.raw) << '\n';
        o.text = os.str();
        if (check)
            check->compare("regenerate", I,
                           oracle::explicit_from_generators(check->semigroup(), g, check->explicit_set(I).lo,
                                                            check->explicit_set(I).hi));
    } else {
        throw ParseError("unknown ideal action '" + a + "'", 0);
    }
    return o;
}

LinkFamily parse_family(const std::string& s) {
    if (s == "any") return LinkFamily::Any;
    if (s == "principal") return LinkFamily::Principal;
    if (s == "canonical") return LinkFamily::Canonical;
    if (s == "mixed") return LinkFamily::Mixed;
    throw ParseError("unknown link family '" + s + "'", 0);
}

Output run_liaison(const CommandRequest& req, const SemigroupPtr& S, const std::vector<RelativeIdeal>& ideals,
                   OracleCheck* check) {
    Output o;
    if (req.action == "principal" || req.action == "canonical") {
        require_ideals(req, 1);
        const bool principal = req.action == "principal";
        const auto r = principal ? principal_liaison_class(ideals[0]) : canonical_liaison_class(ideals[0]);
        o.j = io::liaison_json(r);
        o.text = "ideal:           " + io::ideal_text(ideals[0]) + "\n" + io::liaison_text(r);
        if (check) {
            const auto L = principal ? check->s() : check->k();
            const auto e = check->explicit_set(ideals[0]);
            const auto dual = check->colon(L, e);
            const auto bi = check->colon(L, dual);
            check->compare_value("reflexive", r.reflexive, bi == e);
            if (r.partner) check->compare("partner", *r.partner, check->colon(L, check->explicit_set(r.representatives[0])));
        }
    } else if (req.action == "verify-chain") {
        const auto links = parse_ideals(req.links, S);
        const bool ok = verify_chain(ideals, links, req.even, parse_family(req.family));
        o.j = {{"valid", ok}, {"length", links.size()}, {"even_required", req.even}, {"family", req.family}};
        std::ostringstream os;
        os << "chain: ";
        for (std::size_t i = 0; i < ideals.size(); ++i) {
            os << io::ideal_text(ideals[i]);
            if (i < links.size()) os << " ~[" << io::ideal_text(links[i]) << "]~ ";
        }
        os << "\nlength: " << links.size() << "\nvalid:  " << yes_no(ok) << '\n';
        o.text = os.str();
        if (check) {
            bool ref = !(req.even && links.size() % 2 != 0);
            for (std::size_t k = 0; k < links.size() && ref; ++k) {
                const auto L = check->explicit_set(links[k]);
                const auto I = check->explicit_set(ideals[k]);
                const auto J = check->explicit_set(ideals[k + 1]);
                if (!(check->colon(L, I) == J && check->colon(L, J) == I)) ref = false;
            }
            // The oracle ignores link families, so a restricted family can only
            // turn a valid chain invalid.
            if (parse_family(req.family) == LinkFamily::Any)
                check->compare_value("chain valid", ok, ref);
            else
                check->compare_value("chain valid implies links valid", ok && !ref, false);
        }
    } else {
        throw ParseError("unknown liaison action '" + req.action + "'", 0);
    }
    return o;
}

Output run_orbit(const CommandRequest& req, const std::vector<RelativeIdeal>& ideals,
                 OracleCheck* check) {
    require_ideals(req, 1);
    const auto ops = io::parse_ops(req.ops);
    const auto g = mixed_orbit(ideals[0], ops, req.cap);
    Output o{io::orbit_json(g), io::orbit_text(g), io::orbit_dot(g)};
    if (check) {
        const auto& os_ = check->semigroup();
        auto [lo, hi] = oracle::default_range(os_);
        auto wide = [&](const oracle::ExplicitSet& X) {
            return oracle::shifted(X, 0, -3 * (hi - lo), 3 * (hi - lo));
        };
        const auto Sx = wide(oracle::explicit_semigroup(os_, lo, hi));
        const auto Kx = wide(oracle::oracle_canonical(os_, lo, hi));
        std::vector<oracle::ExplicitSet> nodes{oracle::normalized(check->explicit_set(ideals[0]), os_)};
        for (std::size_t i = 0; i < nodes.size(); ++i)
            for (auto op : ops) {
                auto next = oracle::normalized(
                    oracle::oracle_colon(op == DualityOp::Star ? Sx : Kx, wide(nodes[i]), os_), os_);
                if (std::find(nodes.begin(), nodes.end(), next) == nodes.end()) nodes.push_back(next);
            }
        check->compare_value("orbit size", g.nodes.size(), nodes.size());
        for (std::size_t i = 0; i < std::min(nodes.size(), g.nodes.size()); ++i)
            check->compare("orbit node " + std::to_string(i), g.nodes[i], nodes[i]);
    }
    return o;
}

Output run_classify(const CommandRequest& req, const SemigroupPtr& S, OracleCheck* check) {
    ClassifyOptions options;
    options.enumeration_limit = req.limit;
    options.orbit_cap = req.cap;
    const auto r = classify(S, options);
    Output o{io::report_json(r), io::report_text(r), {}};
    if (check) {
        const auto& os_ = check->semigroup();
        const auto sets = oracle::oracle_enumerate(os_, req.limit);
        check->compare_value("ideal count", r.ideal_count, sets.size());
        auto [lo, hi] = oracle::default_range(os_);
        const Int w = hi - lo;
        auto wide = [&](const oracle::ExplicitSet& X) { return oracle::shifted(X, 0, -3 * w, 3 * w); };
        const auto Sx = wide(oracle::explicit_semigroup(os_, lo, hi));
        const auto Kx = wide(oracle::oracle_canonical(os_, lo, hi));
        std::size_t s_refl = 0, k_refl = 0;
        for (const auto& X : sets) {
            const auto e = wide(X);
            s_refl += oracle::oracle_colon(Sx, oracle::oracle_colon(Sx, e, os_), os_) == e;
            k_refl += oracle::oracle_colon(Kx, oracle::oracle_colon(Kx, e, os_), os_) == e;
        }
        check->compare_value("S-reflexive count", r.s_reflexive_count, s_refl);
        check->compare_value("K-reflexive count", r.k_reflexive_count, k_refl);
    }
    return o;
}

} // namespace

int run(const CommandRequest& req, std::ostream& out, std::ostream& err) {
    try {
        if (req.format != "text" && req.format != "json" && req.format != "dot")
            throw ParseError("unknown format '" + req.format + "'", 0);
        if (req.format == "dot" && req.subcommand != "orbit")
            throw ParseError("--format dot is only valid for orbit", 0);
        if (req.gens.empty()) throw ParseError("--gens is required", 0);

        const auto S = semigroup_from_generators(io::parse_semigroup_spec(req.gens));
        const auto ideals = parse_ideals(req.ideals, S);

        std::optional<OracleCheck> check;
        if (req.check) {
            std::vector<RelativeIdeal> involved = ideals;
            for (const auto& l : parse_ideals(req.links, S)) involved.push_back(l);
            check.emplace(S, involved);
        }
        OracleCheck* chk = check ? &*check : nullptr;

        Output o;
        if (req.subcommand == "sgp")
            o = run_sgp(S, chk);
        else if (req.subcommand == "ideal")
            o = run_ideal(req, ideals, chk);
        else if (req.subcommand == "liaison")
            o = run_liaison(req, S, ideals, chk);
        else if (req.subcommand == "orbit")
            o = run_orbit(req, ideals, chk);
        else if (req.subcommand == "classify")
            o = run_classify(req, S, chk);
        else
            throw ParseError("unknown subcommand '" + req.subcommand + "'", 0);

        std::vector<io::PublishedComparison> rows;
        if (req.paper_compare) rows = io::published_comparison(S);

        if (req.format == "json") {
            if (req.paper_compare) o.j["published_comparison"] = io::comparison_json(rows);
            out << o.j.dump(2) << '\n';
        } else if (req.format == "dot") {
            out << o.dot;
        } else {
            out << o.text;
            if (req.paper_compare) out << "\npublished worked examples for " << io::semigroup_text(*S) << ":\n"
                                       << io::comparison_text(rows);
        }
        return chk ? chk->finish(err) : kOk;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kParseError;
    } catch (const Error& e) {
        err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
        return kDomainError;
    }
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Numerical semigroup relative ideals: colon, duality, liaison classes, mixed orbits"};
    app.require_subcommand(1);
    app.fallthrough();

    CommandRequest req;
    app.add_option("--gens", req.gens, "semigroup generators, e.g. 5,6,8");
    app.add_option("--ideal", req.ideals, "ideal generators, e.g. 0,2 or 0@5 (repeatable)");
    app.add_option("--link", req.links, "linking ideal for verify-chain (repeatable)");
    app.add_option("--format", req.format, "text | json | dot");
    app.add_option("--ops", req.ops, "orbit operators: star,kdual");
    app.add_option("--family", req.family, "verify-chain link family: any | principal | canonical | mixed");
    app.add_option("--cap", req.cap, "orbit node cap");
    app.add_option("--limit", req.limit, "largest Frobenius number classify will enumerate");
    app.add_flag("--check", req.check, "diff every result against the brute-force oracle");
    app.add_flag("--paper-compare", req.paper_compare, "list published worked-example values beside computed ones");
    app.add_flag("--even", req.even, "verify-chain: require an even number of links");
    app.add_flag("--raw", req.raw, "also print explicit element lists");

    auto* sgp = app.add_subcommand("sgp", "semigroup invariants");
    auto* ideal = app.add_subcommand("ideal", "colon|dual|kdual|closure|normalize|gens");
    ideal->add_option("action", req.action)->required()->check(
        CLI::IsMember({"colon", "dual", "kdual", "closure", "normalize", "gens"}));
    auto* liaison = app.add_subcommand("liaison", "principal|canonical|verify-chain");
    liaison->add_option("action", req.action)->required()->check(
        CLI::IsMember({"principal", "canonical", "verify-chain"}));
    auto* orbit = app.add_subcommand("orbit", "mixed duality orbit of an ideal");
    auto* cls = app.add_subcommand("classify", "exhaustive classification of all normalized ideals");
    for (auto* sub : {sgp, ideal, liaison, orbit, cls}) sub->fallthrough();

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        std::ostringstream cli_out, cli_err;
        const int code = app.exit(e, cli_out, cli_err);
        out << cli_out.str();
        err << cli_err.str();
        return code == 0 ? kOk : kParseError;
    }
    for (auto* sub : app.get_subcommands()) req.subcommand = sub->get_name();
    return run(req, out, err);
}

} // namespace nsl::cli
