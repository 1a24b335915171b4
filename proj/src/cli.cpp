#include "qrk/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <json.hpp>
#include <ostream>

#include "qrk/catalog.hpp"
#include "qrk/dsl.hpp"
#include "qrk/partition.hpp"
#include "qrk/qnt.hpp"

namespace qrk::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

long env_default_order(long fallback) {
    if (const char* s = std::getenv("QRK_DEFAULT_ORDER")) {
        char* end = nullptr;
        const long v = std::strtol(s, &end, 10);
        if (end && *end == '\0' && v >= 0) return v;
    }
    return fallback;
}

ordered_json verdict_json(const Verdict& v, bool timings) {
    ordered_json j;
    j["id"] = v.id;
    j["status"] = status_name(v.status);
    j["mode"] = v.mode;
    ordered_json params = ordered_json::object();
    for (const auto& [k, val] : v.params) params[k] = val;
    j["params"] = params;
    j["first_failure"] = v.first_failure ? ordered_json(*v.first_failure) : ordered_json(nullptr);
    j["witness"] = v.witness ? ordered_json(*v.witness) : ordered_json(nullptr);
    // elapsed_ms is zeroed by default so equal runs emit equal bytes.
    j["elapsed_ms"] = timings ? static_cast<long>(v.elapsed_ms) : 0L;
    return j;
}

void print_verdict_text(std::ostream& out, const Verdict& v) {
    out << v.id << ": " << status_name(v.status);
    if (v.status == Status::pass && !v.verified_range.empty())
        out << " (" << v.verified_range << ")";
    if (v.first_failure) out << " at " << *v.first_failure;
    if (v.witness) out << " [" << *v.witness << "]";
    out << "\n";
}

int verdict_exit(const std::vector<Verdict>& vs) {
    for (const auto& v : vs)
        if (v.status == Status::fail) return 1;
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"qrk: exact q-series, partition and quantum-congruence verification kit"};
    app.require_subcommand(1);

    CliConfig cfg;
    cfg.order = env_default_order(24);
    cfg.q_order = cfg.order;

    auto* list = app.add_subcommand("list", "List the identity registry");
    bool list_json = false;
    list->add_flag("--json", list_json, "JSON output");

    auto* verify = app.add_subcommand("verify", "Verify one registered identity");
    std::string verify_id;
    verify->add_option("id", verify_id, "identity id")->required();
    long verify_order = -1, verify_qorder = -1;
    verify->add_option("--order", verify_order, "range / x-series order override");
    verify->add_option("--q-order", verify_qorder, "q-valuation order override");
    verify->add_option("--seed", cfg.seed, "seed override for randomized records");
    verify->add_flag("--json", cfg.json, "JSON output");
    verify->add_flag("--timings", cfg.timings, "report real elapsed_ms in JSON");

    auto* verify_all = app.add_subcommand("verify-all", "Verify every registered identity");
    bool all_json = false, all_timings = false;
    verify_all->add_flag("--json", all_json, "JSON output");
    verify_all->add_flag("--timings", all_timings, "report real elapsed_ms in JSON");

    auto* qnt = app.add_subcommand("qnt", "Quantum number theory checks");
    qnt->require_subcommand(1);
    auto* fermat = qnt->add_subcommand("fermat", "q-Fermat sweep");
    long fp = 0, fa_max = 10;
    fermat->add_option("--p", fp, "prime modulus")->required();
    fermat->add_option("--a-max", fa_max, "check a = 1..a-max");
    auto* wilson = qnt->add_subcommand("wilson", "q-Wilson check");
    long wp = 0;
    wilson->add_option("--p", wp, "odd prime")->required();
    auto* euler = qnt->add_subcommand("euler", "q-Euler totient check");
    long em = 0, ea = 0;
    euler->add_option("--m", em, "modulus")->required();
    euler->add_option("--a", ea, "base, coprime to m")->required();
    auto* chi = qnt->add_subcommand("chi", "chi_p quotient polynomial");
    long cp = 0;
    bool chi_emit = false;
    chi->add_option("--p", cp, "odd prime")->required();
    chi->add_flag("--emit", chi_emit, "print the polynomial");

    auto* partition = app.add_subcommand("partition", "Partition identity checks");
    bool check5 = false, check7 = false;
    long scan_prime = -1;
    long part_order = env_default_order(50);
    partition->add_flag("--check5", check5, "verify the p(5n+4) identity");
    partition->add_flag("--check7", check7, "verify the p(7n+5) identity");
    partition->add_option("--scan-prime", scan_prime, "scan the canceled prime-partition identity to T");
    partition->add_option("--order", part_order, "series order for --check5/--check7");

    auto* eval = app.add_subcommand("eval", "Evaluate a series expression");
    std::string expr_text;
    eval->add_option("expr", expr_text, "expression")->required();
    long eval_order = -1, eval_qorder = -1;
    eval->add_option("--order", eval_order, "series truncation order");
    eval->add_option("--q-order", eval_qorder, "q-valuation order for x-free sums");

    std::vector<std::string> argv(args.rbegin(), args.rend());  // CLI11 takes reversed args
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        const Catalog& cat = Catalog::instance();

        if (*list) {
            if (list_json) {
                ordered_json j = ordered_json::array();
                for (const auto& id : cat.ids()) {
                    const IdentityRecord& r = cat.record(id);
                    ordered_json e;
                    e["id"] = r.id;
                    e["mode"] = r.mode;
                    e["statement"] = r.statement;
                    j.push_back(e);
                }
                out << j.dump(2) << "\n";
            } else {
                for (const auto& id : cat.ids()) {
                    const IdentityRecord& r = cat.record(id);
                    out << r.id << "  [" << r.mode << "]  " << r.statement << "\n";
                }
            }
            return 0;
        }

        if (*verify) {
            if (!cat.has(verify_id)) {
                err << "error: unknown identity id '" << verify_id << "'; see `qrk list`\n";
                return 2;
            }
            std::map<std::string, long> overrides;
            if (verify_order >= 0) overrides["order"] = verify_order;
            if (verify_qorder >= 0) overrides["qorder"] = verify_qorder;
            if (cfg.seed >= 0) overrides["seed"] = cfg.seed;
            const Verdict v = cat.verify(verify_id, overrides);
            if (cfg.json) out << verdict_json(v, cfg.timings).dump(2) << "\n";
            else print_verdict_text(out, v);
            return verdict_exit({v});
        }

        if (*verify_all) {
            const std::vector<Verdict> vs = cat.verify_all();
            if (all_json) {
                ordered_json j = ordered_json::array();
                for (const auto& v : vs) j.push_back(verdict_json(v, all_timings));
                out << j.dump(2) << "\n";
            } else {
                for (const auto& v : vs) print_verdict_text(out, v);
                long pass = 0, kf = 0, fail = 0;
                for (const auto& v : vs) {
                    if (v.status == Status::pass) ++pass;
                    else if (v.status == Status::known_false_confirmed) ++kf;
                    else ++fail;
                }
                out << pass << " pass, " << kf << " known-false-confirmed, " << fail
                    << " fail\n";
            }
            return verdict_exit(vs);
        }

        if (*qnt) {
            std::vector<Verdict> vs;
            if (*fermat) {
                for (long a = 1; a <= fa_max; ++a) {
                    vs.push_back(q_fermat_check(a, fp));
                    print_verdict_text(out, vs.back());
                }
            } else if (*wilson) {
                vs.push_back(q_wilson_check(wp));
                print_verdict_text(out, vs.back());
            } else if (*euler) {
                vs.push_back(q_euler_check(ea, em));
                print_verdict_text(out, vs.back());
            } else if (*chi) {
                const ChiPolynomial c = chi_poly(cp);
                if (chi_emit) {
                    out << c.chi.str() << "\n";
                } else {
                    out << "chi_" << cp << ": degree " << c.chi.degree()
                        << ", exact quotient verified\n";
                }
            }
            return verdict_exit(vs);
        }

        if (*partition) {
            std::vector<Verdict> vs;
            if (check5) {
                vs.push_back(ramanujan_mod5_check(static_cast<int>(part_order)));
                print_verdict_text(out, vs.back());
            }
            if (check7) {
                vs.push_back(ramanujan_mod7_check(static_cast<int>(part_order)));
                print_verdict_text(out, vs.back());
            }
            if (scan_prime >= 0) {
                const Verdict v = cat.verify("prime-partition", {{"order", scan_prime}});
                print_verdict_text(out, v);
                vs.push_back(v);
            }
            if (!check5 && !check7 && scan_prime < 0) {
                err << "error: partition requires --check5, --check7 or --scan-prime\n";
                return 2;
            }
            return verdict_exit(vs);
        }

        if (*eval) {
            const long T = eval_order >= 0 ? eval_order : env_default_order(24);
            const long qT = eval_qorder >= 0 ? eval_qorder : T;
            try {
                const dsl::ExprPtr e = dsl::parse(expr_text);
                out << dsl::eval_series(e, static_cast<int>(T), qT).str() << "\n";
                return 0;
            } catch (const dsl::parse_error& pe) {
                err << "error: " << pe.what() << "\n";
                return 2;
            } catch (const dsl::eval_error& ee) {
                err << "error: " << ee.what() << "\n";
                return 2;
            }
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace qrk::cli
