#include "commands.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "mink/bounds.hpp"
#include "mink/gcd_engine.hpp"
#include "mink/smallgroups.hpp"
#include "mink/verifier.hpp"

namespace mink::cli {

namespace {

using nlohmann::json;

// ---- empirical sweep cache ------------------------------------------------

json load_cache(const std::string& path) {
    std::ifstream in(path);
    if (!in) return json::object();  // no cache yet
    try {
        json doc = json::parse(in);
        if (doc.is_object()) return doc;
    } catch (const json::parse_error&) {
    }
    std::cerr << "warning: ignoring corrupt cache file " << path << "\n";
    return json::object();
}

void save_cache(const std::string& path, const json& doc) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write cache file " + path);
    out << doc.dump(2) << "\n";
}

std::string cache_key(const ClassicalFamily& G, const FieldSpec& K, std::int64_t p,
                      int budget, int window) {
    return "group=" + to_string(G.family) + ";rank=" + std::to_string(G.rank) +
           ";field=" + K.to_string() + ";p=" + std::to_string(p) +
           ";budget=" + std::to_string(budget) + ";window=" + std::to_string(window);
}

EmpiricalResult sweep_with_cache(json* cache, bool* dirty, const ClassicalFamily& G,
                                 const FieldSpec& K, std::int64_t p, int budget, int window) {
    const std::string key = cache ? cache_key(G, K, p, budget, window) : std::string();
    if (cache) {
        const auto it = cache->find(key);
        if (it != cache->end()) {
            try {
                EmpiricalResult r;
                r.exponent = it->at("exponent").get<int>();
                r.primes_used = it->at("primes_used").get<int>();
                r.stable = it->at("stable").get<bool>();
                r.window = it->value("window", window);
                return r;
            } catch (const json::exception&) {
                // malformed entry: fall through and recompute
            }
        }
    }
    const EmpiricalResult r = empirical_exponent(G, K, p, budget, window);
    if (cache) {
        (*cache)[key] = {{"exponent", r.exponent},
                         {"primes_used", r.primes_used},
                         {"stable", r.stable},
                         {"window", r.window}};
        *dirty = true;
    }
    return r;
}

// ---- witnesses --------------------------------------------------------------

struct WitnessSpec {
    std::int64_t p;
    int m;
    int k;
    MatrixGroupGens gens;
};

WitnessSpec parse_witness(const std::string& name) {
    const auto bad = [&name] {
        return std::invalid_argument("group: unknown witness '" + name +
                                     "' (expected cp-wr-sk:p:k or c4-wr-sk:k)");
    };
    const auto to_int = [&](const std::string& s) {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) throw bad();
        return std::stoll(s);
    };
    if (name.rfind("cp-wr-sk:", 0) == 0) {
        const std::string rest = name.substr(9);
        const auto colon = rest.find(':');
        if (colon == std::string::npos) throw bad();
        const std::int64_t p = to_int(rest.substr(0, colon));
        const int k = static_cast<int>(to_int(rest.substr(colon + 1)));
        return {p, 1, k, cp_wreath_generators(p, k)};
    }
    if (name.rfind("c4-wr-sk:", 0) == 0) {
        const int k = static_cast<int>(to_int(name.substr(9)));
        return {2, 2, k, c4_wreath_generators(k)};
    }
    throw bad();
}

// ---- renderers ----------------------------------------------------------------

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (const char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string opt_str(const json& pl, const char* key) {
    return pl.contains(key) ? pl[key].dump() : std::string();
}

std::string bound_result(const json& pl) {
    return pl.contains("exponent") ? pl["exponent"].dump() : pl["bound"].get<std::string>();
}

void render_list(std::ostringstream& os, const json& pl, const char* key) {
    const auto& list = pl[key];
    if (list.empty()) return;
    os << key << " (" << list.size() << "):\n";
    for (const auto& item : list) os << "  " << item.get<std::string>() << "\n";
}

std::string render_text(const json& pl) {
    std::ostringstream os;
    const std::string cmd = pl.at("command").get<std::string>();
    if (cmd == "bound") {
        os << bound_result(pl) << "\n";
    } else if (cmd == "empirical") {
        os << pl["group"].get<std::string>() << " rank " << pl["rank"] << " over "
           << pl["field"].get<std::string>();
        if (pl.contains("p")) {
            os << ", p=" << pl["p"] << ": exponent " << pl["exponent"] << " ("
               << (pl["stable"].get<bool>() ? "stable" : "UNSTABLE") << ", "
               << pl["primes_used"] << " primes, window " << pl["window"] << ")\n";
        } else {
            os << ", p <= " << pl["p_max"] << ": " << pl["bound"].get<std::string>()
               << (pl["all_stable"].get<bool>() ? " (all stable)" : " (UNSTABLE components)")
               << "\n";
            for (const auto& c : pl["components"])
                os << "  p=" << c["p"] << ": exponent " << c["exponent"] << " ("
                   << (c["stable"].get<bool>() ? "stable" : "UNSTABLE") << ")\n";
        }
    } else if (cmd == "verify") {
        os << "claim " << pl["claim"].get<std::string>() << ": "
           << (pl["passed"].get<bool>() ? "PASS" : "FAIL") << " (" << pl["cases_checked"]
           << " cases)\n";
        if (pl.contains("rows"))
            for (const auto& row : pl["rows"])
                os << "g=" << row["g"] << ": silverberg=" << row["silverberg"].get<std::string>()
                   << " endofield=" << row["endofield"].get<std::string>()
                   << " sp=" << row["sp"].get<std::string>() << "\n";
        render_list(os, pl, "violations");
        render_list(os, pl, "strictness_mismatches");
        render_list(os, pl, "equality_cases");
        render_list(os, pl, "observations");
    } else if (cmd == "group") {
        if (pl["action"].get<std::string>() == "witness") {
            os << "witness " << pl["witness"].get<std::string>() << ": dimension "
               << pl["dimension"] << ", " << pl["generators"].size() << " generators\n";
            for (const auto& g : pl["generators"]) os << "  " << g.get<std::string>() << "\n";
            os << "order formula " << pl["order_formula"].get<std::string>()
               << ", sylow exponent " << pl["sylow_exponent"] << ", projective exponent "
               << pl["projective_exponent"] << "\n";
            if (pl.contains("symplectic"))
                os << "symplectic: " << (pl["symplectic"].get<bool>() ? "yes" : "no") << "\n";
        } else if (pl["cap_exceeded"].get<bool>()) {
            os << "cap exceeded (cap " << pl["cap"] << ")\n";
        } else {
            os << pl["order"].get<std::string>() << "\n";
        }
    }
    return os.str();
}

std::string render_csv(const json& pl) {
    std::ostringstream os;
    const std::string cmd = pl.at("command").get<std::string>();
    if (cmd == "bound") {
        os << "kind,g,n,field,p,result\n";
        os << pl["kind"].get<std::string>() << ',' << opt_str(pl, "g") << ','
           << opt_str(pl, "n") << ','
           << (pl.contains("field") ? csv_escape(pl["field"].get<std::string>()) : std::string())
           << ',' << opt_str(pl, "p") << ',' << csv_escape(bound_result(pl)) << "\n";
    } else if (cmd == "empirical") {
        os << "group,rank,field,p,exponent,primes_used,stable,window\n";
        const std::string prefix = pl["group"].get<std::string>() + "," +
                                   pl["rank"].dump() + "," +
                                   csv_escape(pl["field"].get<std::string>()) + ",";
        if (pl.contains("p")) {
            os << prefix << pl["p"] << ',' << pl["exponent"] << ',' << pl["primes_used"] << ','
               << (pl["stable"].get<bool>() ? "true" : "false") << ',' << pl["window"] << "\n";
        } else {
            for (const auto& c : pl["components"])
                os << prefix << c["p"] << ',' << c["exponent"] << ',' << c["primes_used"] << ','
                   << (c["stable"].get<bool>() ? "true" : "false") << ',' << pl["window"]
                   << "\n";
        }
    } else if (cmd == "verify") {
        os << "claim,cases_checked,violations,strictness_mismatches,equality_cases,passed\n";
        os << pl["claim"].get<std::string>() << ',' << pl["cases_checked"] << ','
           << pl["violations"].size() << ',' << pl["strictness_mismatches"].size() << ','
           << pl["equality_cases"].size() << ','
           << (pl["passed"].get<bool>() ? "true" : "false") << "\n";
    } else if (cmd == "group") {
        if (pl["action"].get<std::string>() == "witness") {
            os << "action,witness,dimension,generators,order_formula,sylow_exponent,"
                  "projective_exponent\n";
            os << "witness," << csv_escape(pl["witness"].get<std::string>()) << ','
               << pl["dimension"] << ',' << pl["generators"].size() << ','
               << csv_escape(pl["order_formula"].get<std::string>()) << ','
               << pl["sylow_exponent"] << ',' << pl["projective_exponent"] << "\n";
        } else {
            os << "action,dimension,generators,cap,order,cap_exceeded\n";
            os << "order," << pl["dimension"] << ',' << pl["generator_count"] << ','
               << pl["cap"] << ','
               << (pl["order"].is_null() ? std::string()
                                         : csv_escape(pl["order"].get<std::string>()))
               << ',' << (pl["cap_exceeded"].get<bool>() ? "true" : "false") << "\n";
        }
    }
    return os.str();
}

void md_row(std::ostringstream& os, const std::vector<std::string>& cells) {
    os << '|';
    for (const std::string& c : cells) os << ' ' << c << " |";
    os << "\n";
}

void md_header(std::ostringstream& os, const std::vector<std::string>& cells) {
    md_row(os, cells);
    os << '|';
    for (std::size_t i = 0; i < cells.size(); ++i) os << " --- |";
    os << "\n";
}

std::string render_markdown(const json& pl) {
    std::ostringstream os;
    const std::string cmd = pl.at("command").get<std::string>();
    if (cmd == "bound") {
        md_header(os, {"kind", "g", "n", "field", "p", "result"});
        md_row(os, {pl["kind"].get<std::string>(), opt_str(pl, "g"), opt_str(pl, "n"),
                    pl.contains("field") ? pl["field"].get<std::string>() : std::string(),
                    opt_str(pl, "p"), "`" + bound_result(pl) + "`"});
    } else if (cmd == "empirical") {
        os << "**" << pl["group"].get<std::string>() << " rank " << pl["rank"] << " over "
           << pl["field"].get<std::string>() << "**";
        if (pl.contains("bound")) os << " — bound `" << pl["bound"].get<std::string>() << "`";
        os << "\n\n";
        md_header(os, {"p", "exponent", "primes_used", "stable"});
        const auto one = [&os](const json& c) {
            md_row(os, {c["p"].dump(), c["exponent"].dump(), c["primes_used"].dump(),
                        c["stable"].get<bool>() ? "yes" : "no"});
        };
        if (pl.contains("p"))
            one(pl);
        else
            for (const auto& c : pl["components"]) one(c);
    } else if (cmd == "verify") {
        os << "**claim " << pl["claim"].get<std::string>() << "**: "
           << (pl["passed"].get<bool>() ? "PASS" : "FAIL") << " (" << pl["cases_checked"]
           << " cases)\n";
        if (pl.contains("rows")) {
            os << "\n";
            md_header(os, {"g", "silverberg", "endofield", "sp"});
            for (const auto& row : pl["rows"])
                md_row(os, {row["g"].dump(), "`" + row["silverberg"].get<std::string>() + "`",
                            "`" + row["endofield"].get<std::string>() + "`",
                            "`" + row["sp"].get<std::string>() + "`"});
        }
        for (const char* key :
             {"violations", "strictness_mismatches", "equality_cases", "observations"}) {
            if (pl[key].empty()) continue;
            os << "\n" << key << ":\n";
            for (const auto& item : pl[key]) os << "- " << item.get<std::string>() << "\n";
        }
    } else if (cmd == "group") {
        if (pl["action"].get<std::string>() == "witness") {
            md_header(os, {"witness", "dimension", "generators", "order_formula",
                           "sylow_exponent", "projective_exponent"});
            md_row(os, {pl["witness"].get<std::string>(), pl["dimension"].dump(),
                        std::to_string(pl["generators"].size()),
                        "`" + pl["order_formula"].get<std::string>() + "`",
                        pl["sylow_exponent"].dump(), pl["projective_exponent"].dump()});
        } else {
            md_header(os, {"dimension", "generators", "cap", "order"});
            md_row(os, {pl["dimension"].dump(), pl["generator_count"].dump(), pl["cap"].dump(),
                        pl["order"].is_null() ? "cap exceeded"
                                              : "`" + pl["order"].get<std::string>() + "`"});
        }
    }
    return os.str();
}

}  // namespace

CommandOutput cmd_bound(const BoundArgs& args) {
    CommandOutput out;
    json& pl = out.payload;
    pl["command"] = "bound";
    pl["kind"] = args.kind;

    if (args.kind == "minkowski") {
        if (args.n < 1) throw std::invalid_argument("bound minkowski: requires --n >= 1");
        const FieldSpec K = FieldSpec::parse(args.field);
        pl["n"] = args.n;
        pl["field"] = K.to_string();
        if (args.p != 0) {
            pl["p"] = args.p;
            pl["exponent"] = r_gl_k(args.n, K, args.p);
        } else {
            FactoredInteger bound;
            for (const std::int64_t p : primes_up_to(args.n * K.degree() + 1))
                bound.mul_prime_power(p, r_gl_k(args.n, K, p));
            pl["bound"] = bound.to_string();
        }
        return out;
    }

    if (args.g < 1)
        throw std::invalid_argument("bound " + args.kind + ": requires --g >= 1");
    pl["g"] = args.g;
    if (args.kind == "silverberg") {
        if (args.p != 0) {
            pl["p"] = args.p;
            pl["exponent"] = r_silverberg(args.g, args.p);
        } else {
            pl["bound"] = silverberg_product(args.g).to_string();
        }
    } else if (args.kind == "endofield") {
        if (args.p != 0) {
            pl["p"] = args.p;
            pl["exponent"] = r_prime(args.g, args.p);
        } else {
            pl["bound"] = endofield_product(args.g).to_string();
        }
    } else if (args.kind == "sp") {
        if (args.p != 0) {
            pl["p"] = args.p;
            pl["exponent"] = args.p == 2 ? r_gl_k(args.g, FieldSpec::parse("Q(i)"), 2)
                                         : r_gl_q(2 * args.g, args.p);
        } else {
            pl["bound"] = sp_subgroup_product(args.g).to_string();
        }
    } else {
        throw std::invalid_argument("bound: unknown kind '" + args.kind + "'");
    }
    return out;
}

CommandOutput cmd_empirical(const EmpiricalArgs& args) {
    if ((args.p == 0) == (args.p_max == 0))
        throw std::invalid_argument("empirical: give exactly one of --p or --p-max");
    if (args.rank < 1) throw std::invalid_argument("empirical: --rank must be >= 1");
    const ClassicalFamily G{parse_family(args.group), args.rank};
    const FieldSpec K = FieldSpec::parse(args.field);

    const bool use_cache = !args.cache_path.empty();
    json cache;
    bool dirty = false;
    if (use_cache) cache = load_cache(args.cache_path);
    json* cache_ptr = use_cache ? &cache : nullptr;

    CommandOutput out;
    json& pl = out.payload;
    pl["command"] = "empirical";
    pl["group"] = args.group;
    pl["rank"] = args.rank;
    pl["field"] = K.to_string();
    pl["budget"] = args.budget;
    pl["window"] = args.window;

    if (args.p != 0) {
        const EmpiricalResult r =
            sweep_with_cache(cache_ptr, &dirty, G, K, args.p, args.budget, args.window);
        pl["p"] = args.p;
        pl["exponent"] = r.exponent;
        pl["primes_used"] = r.primes_used;
        pl["stable"] = r.stable;
        if (!r.stable) out.exit_code = kExitUnstable;
    } else {
        json comps = json::array();
        FactoredInteger bound;
        bool all_stable = true;
        const auto add = [&](std::int64_t p, const EmpiricalResult& r) {
            comps.push_back({{"p", p},
                             {"exponent", r.exponent},
                             {"primes_used", r.primes_used},
                             {"stable", r.stable}});
            bound.mul_prime_power(p, r.exponent);
            all_stable = all_stable && r.stable;
        };
        if (use_cache) {
            for (const std::int64_t p : primes_up_to(args.p_max))
                add(p, sweep_with_cache(cache_ptr, &dirty, G, K, p, args.budget, args.window));
        } else {
            const EmpiricalBound b = empirical_bound(G, K, args.p_max, args.budget, args.window);
            for (const auto& [p, r] : b.components) add(p, r);
        }
        pl["p_max"] = args.p_max;
        pl["bound"] = bound.to_string();
        pl["all_stable"] = all_stable;
        pl["components"] = std::move(comps);
        if (!all_stable) out.exit_code = kExitUnstable;
    }

    if (use_cache && dirty) save_cache(args.cache_path, cache);
    return out;
}

CommandOutput cmd_verify(const VerifyArgs& args) {
    VerificationReport rep;
    json extra = json::object();
    if (args.claim == "double") {
        rep = check_rank_doubling(args.n_max ? args.n_max : 20, args.d_max ? args.d_max : 6,
                                  args.p_max ? args.p_max : 13);
    } else if (args.claim == "imprimitive1") {
        rep = check_imprimitive_bound(extension_corpus(), args.n_max ? args.n_max : 10,
                                      args.p_max ? args.p_max : 13);
    } else if (args.claim == "imprimitive2") {
        rep = check_imprimitive_decomposition(extension_corpus(), args.n_max ? args.n_max : 8,
                                              args.p_max ? args.p_max : 13);
    } else if (args.claim == "imprimitive3") {
        rep = check_imprimitive_strict(args.n_max ? args.n_max : 12,
                                       args.d_max ? args.d_max : 12);
    } else if (args.claim == "imprimitive-p2") {
        rep = check_imprimitive_two_adic(args.g_max ? args.g_max : 40);
    } else if (args.claim == "table") {
        const int g_max = args.g_max ? args.g_max : 3;
        rep = check_table(g_max);
        json rows = json::array();
        for (const TableRow& row : reproduce_table(g_max))
            rows.push_back({{"g", row.g},
                            {"silverberg", row.silverberg.to_string()},
                            {"endofield", row.endofield.to_string()},
                            {"sp", row.sp.to_string()}});
        extra["rows"] = std::move(rows);
    } else if (args.claim == "empirical") {
        rep = empirical_vs_closed(preset_corpus(), args.n_max ? args.n_max : 6,
                                  args.p_max ? args.p_max : 13, args.budget, args.window);
    } else {
        throw std::invalid_argument("verify: unknown claim '" + args.claim + "'");
    }

    CommandOutput out;
    out.payload = {{"command", "verify"},
                   {"claim", rep.claim_id},
                   {"cases_checked", rep.cases_checked},
                   {"passed", rep.passed()},
                   {"violations", rep.violations},
                   {"strictness_mismatches", rep.strictness_mismatches},
                   {"equality_cases", rep.equality_cases},
                   {"observations", rep.observations}};
    out.payload.update(extra);
    if (!rep.passed()) out.exit_code = kExitVerifyFail;
    return out;
}

CommandOutput cmd_group(const GroupArgs& args) {
    if (args.action != "order" && args.action != "witness")
        throw std::invalid_argument("group: action must be 'order' or 'witness'");
    if (args.witness.empty() && args.gens.empty())
        throw std::invalid_argument("group: give --witness or --gens");
    if (!args.witness.empty() && !args.gens.empty())
        throw std::invalid_argument("group: --witness and --gens are mutually exclusive");

    CommandOutput out;
    json& pl = out.payload;
    pl["command"] = "group";
    pl["action"] = args.action;

    if (args.action == "witness") {
        if (args.witness.empty())
            throw std::invalid_argument("group witness: requires --witness");
        const WitnessSpec w = parse_witness(args.witness);
        pl["witness"] = args.witness;
        pl["dimension"] = w.gens.dimension;
        json gens = json::array();
        for (const RatMatrix& g : w.gens.generators) gens.push_back(g.to_string());
        pl["generators"] = std::move(gens);
        pl["order_formula"] = wreath_order(w.p, w.m, w.k).to_string();
        pl["sylow_exponent"] = wreath_sylow_exponent(w.p, w.m, w.k);
        pl["projective_exponent"] = scalar_quotient_exponent(w.p, w.m, w.k);
        if (w.p == 2 && w.m == 2) {
            bool symplectic = true;
            for (const RatMatrix& g : w.gens.generators)
                symplectic = symplectic && is_symplectic(g, static_cast<int>(w.gens.dimension / 2));
            pl["symplectic"] = symplectic;
        }
        return out;
    }

    MatrixGroupGens gens;
    if (!args.witness.empty()) {
        pl["witness"] = args.witness;
        gens = parse_witness(args.witness).gens;
    } else {
        for (const std::string& text : args.gens)
            gens.generators.push_back(RatMatrix::parse(text));
        gens.dimension = gens.generators.front().dim();
    }
    pl["dimension"] = gens.dimension;
    pl["generator_count"] = gens.generators.size();
    pl["cap"] = args.cap;
    const std::optional<FactoredInteger> order = closure_order(gens, args.cap);
    if (order.has_value()) {
        pl["order"] = order->to_string();
        pl["cap_exceeded"] = false;
    } else {
        pl["order"] = nullptr;
        pl["cap_exceeded"] = true;
    }
    return out;
}

std::string render(const CommandOutput& out, const std::string& format) {
    if (format == "json") return out.payload.dump(2) + "\n";
    if (format == "text") return render_text(out.payload);
    if (format == "csv") return render_csv(out.payload);
    if (format == "markdown") return render_markdown(out.payload);
    throw std::invalid_argument("render: unknown format '" + format + "'");
}

}  // namespace mink::cli
