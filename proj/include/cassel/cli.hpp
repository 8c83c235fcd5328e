#pragma once

// Command dispatch behind the command-line tool. Kept apart from the
// argument parser so the tests can drive commands in-process.
//
// Exit contract: 0 on success and on verified identities, 2 when a
// verification ran and reported a mismatch, 1 on malformed input or violated
// preconditions.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "cassel/jsonio.hpp"
#include "cassel/selftest.hpp"

namespace cassel {

struct RunConfig {
    std::string command;
    std::string input;              // path or inline JSON
    size_t order = 0;               // 0: default by mode (8 symbolic, 16 numeric)
    std::string mode = "symbolic";  // symbolic | numeric
    std::string cs_case = "inert";  // inert | split
    std::string n_range = "0..5";
    unsigned long long seed = 20240611ULL;
    std::string output;             // empty: stdout
    std::string format = "json";    // json | tsv
    int which = 1;                  // period-integral selector
};

namespace cli_detail {

inline json load_input(const std::string& input) {
    if (input.empty()) throw constraint_error("missing input", "expected a character JSON");
    if (!input.empty() && (input[0] == '{' || input[0] == '[')) return json::parse(input);
    std::ifstream f(input);
    if (!f) throw constraint_error("missing input", "cannot open " + input);
    json j;
    f >> j;
    return j;
}

inline size_t effective_order(const RunConfig& cfg) {
    if (cfg.order != 0) return cfg.order;
    if (const char* env = std::getenv("CASSEL_ORDER")) {
        long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<size_t>(v);
    }
    return cfg.mode == "numeric" ? 16u : 8u;
}

inline CSCase parse_case(const std::string& s) {
    if (s == "inert") return CSCase::Inert;
    if (s == "split") return CSCase::Split;
    throw constraint_error("unknown case", s + " (expected inert or split)");
}

inline std::pair<int, int> parse_range(const std::string& s) {
    auto dots = s.find("..");
    if (dots == std::string::npos) {
        int n = std::stoi(s);
        return {n, n};
    }
    return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
}

inline CSContext context_from_config(const RunConfig& cfg) {
    CSCase c = parse_case(cfg.cs_case);
    if (cfg.mode == "symbolic") return CSContext::make_symbolic(c);
    CharacterTriple chi = character_from_json(load_input(cfg.input));
    if (chi.group != Group::GSp4)
        throw constraint_error("group mismatch", "numeric contexts start from a GSp4 character");
    auto x1 = chi.x1().as_rat(), x2 = chi.x2().as_rat(), x0 = chi.x0().as_rat(),
         qv = chi.q.as_rat();
    if (!x1 || !x2 || !x0 || !qv)
        throw constraint_error("numeric mode", "requires fully numeric character values");
    return CSContext::make_numeric(c, *x1, *x2, *x0, *qv);
}

inline void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.output.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream f(cfg.output);
    if (!f) throw constraint_error("output", "cannot open " + cfg.output);
    f << text << "\n";
}

}  // namespace cli_detail

inline int run(const RunConfig& cfg) {
    using namespace cli_detail;
    try {
        const std::vector<std::string> names = uvq_names();
        if (cfg.command == "verify-identity") {
            CSContext ctx = context_from_config(cfg);
            IdentityReport rep = verify_identity(ctx, effective_order(cfg));
            emit(cfg, identity_report_to_json(rep).dump(2));
            return rep.equal ? 0 : 2;
        }
        if (cfg.command == "cs-values") {
            CSContext ctx = context_from_config(cfg);
            auto [lo, hi] = parse_range(cfg.n_range);
            json rows = json::array();
            std::ostringstream tsv;
            for (int n = lo; n <= hi; ++n) {
                RationalFn v = ctx.cs_case == CSCase::Inert ? cs_inert(n, ctx)
                                                            : cs_split(n, ctx);
                std::string s;
                if (auto r = v.as_rat())
                    s = r->to_string();
                else
                    s = v.to_string(names);
                rows.push_back({{"n", n}, {"value", s}});
                tsv << n << "\t" << s << "\n";
            }
            if (cfg.format == "tsv") {
                emit(cfg, tsv.str());
            } else {
                json out;
                out["case"] = cfg.cs_case;
                out["mode"] = cfg.mode;
                out["rows"] = rows;
                emit(cfg, out.dump(2));
            }
            return 0;
        }
        if (cfg.command == "lfactor") {
            CSContext ctx = context_from_config(cfg);
            Twist twist = parse_case(cfg.cs_case) == CSCase::Inert ? Twist::Quadratic
                                                                   : Twist::Trivial;
            EulerFactor f = euler_factor(ctx, twist);
            size_t order = effective_order(cfg);
            TruncatedSeries s = euler_series(f, order);
            json inv = json::array(), ser = json::array();
            std::ostringstream tsv;
            for (size_t k = 0; k < f.inverse.size(); ++k)
                inv.push_back(f.inverse[k].to_string(names));
            for (size_t k = 0; k <= order; ++k) {
                std::string cs = s[k].to_string(names);
                ser.push_back(cs);
                tsv << k << "\t" << cs << "\n";
            }
            if (cfg.format == "tsv") {
                emit(cfg, tsv.str());
            } else {
                json out;
                out["twist"] = twist == Twist::Quadratic ? "quadratic" : "trivial";
                out["inverse"] = inv;
                out["series"] = ser;
                out["order"] = order;
                emit(cfg, out.dump(2));
            }
            return 0;
        }
        if (cfg.command == "theta-transfer") {
            CharacterTriple chi = character_from_json(load_input(cfg.input));
            ThetaTransfer t = theta_transfer(chi);
            json out;
            out["xi"] = character_to_json(t.xi);
            out["case_tag"] = theta_case_name(t.case_tag);
            out["normalized_input"] = character_to_json(t.normalized);
            emit(cfg, out.dump(2));
            return 0;
        }
        if (cfg.command == "shalika-report") {
            CharacterTriple chi = character_from_json(load_input(cfg.input));
            ShalikaReport rep = shalika_verdict(chi);
            emit(cfg, shalika_report_to_json(rep).dump(2));
            return 0;
        }
        if (cfg.command == "padic-oracle") {
            json in = load_input(cfg.input);
            long long p = in.value("p", 3LL);
            int depth = in.value("depth", 3);
            int jmax = in.value("jmax", 12);
            PadicSampler sampler(p, depth);
            json out;
            out["p"] = p;
            out["depth"] = depth;
            double tol;
            PadicIntegralResult r;
            double closed;
            if (cfg.which == 1) {
                Rat z2 = Rat::from_string(in.value("z2", std::string("1")));
                r = padic_integral_comp1(sampler, z2, jmax);
                closed = comp1_closed_form(p, z2);
                tol = 1e-9;
                out["which"] = 1;
                out["z2"] = z2.to_string();
            } else {
                Rat z1 = Rat::from_string(in.value("z1", std::string("1")));
                Rat z0 = Rat::from_string(in.value("z0", std::string("1/2")));
                r = padic_integral_comp2(sampler, z1, z0, jmax);
                closed = comp2_closed_form(p, z1, z0);
                tol = 1e-6;
                out["which"] = 2;
                out["z1"] = z1.to_string();
                out["z0"] = z0.to_string();
            }
            double err = std::abs(r.value - std::complex<double>(closed));
            out["value_re"] = r.value.real();
            out["value_im"] = r.value.imag();
            out["closed_form"] = closed;
            out["abs_error"] = err;
            out["tail_bound"] = r.tail_bound;
            out["within_tolerance"] = err + r.tail_bound <= tol;
            emit(cfg, out.dump(2));
            return (err + r.tail_bound <= tol) ? 0 : 2;
        }
        if (cfg.command == "selftest") {
            auto results = run_acceptance(cfg.seed);
            json arr = json::array();
            bool all = true;
            std::ostringstream lines;
            for (const auto& r : results) {
                all = all && r.pass;
                lines << (r.pass ? "PASS" : "FAIL") << " criterion " << r.index << ": "
                      << r.name;
                if (!r.detail.empty()) lines << " -- " << r.detail;
                lines << "\n";
                arr.push_back({{"index", r.index},
                               {"name", r.name},
                               {"pass", r.pass},
                               {"detail", r.detail}});
            }
            std::cout << lines.str();
            if (!cfg.output.empty()) {
                std::ofstream f(cfg.output);
                f << arr.dump(2) << "\n";
            }
            return all ? 0 : 2;
        }
        throw constraint_error("unknown command", cfg.command);
    } catch (const pole_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const constraint_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const json::exception& e) {
        std::cerr << "error: malformed JSON: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace cassel
