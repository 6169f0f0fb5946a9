// command-line surface: reproducible experiments with machine-readable output
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <thread>

#include "woundcount/acceptance.hpp"
#include "woundcount/report.hpp"

using namespace woundcount;

namespace {

struct CommonArgs {
    uint32_t p = 2;
    uint32_t q = 2;
    unsigned long long budget = 0;  // 0: module default
    unsigned workers = 0;           // 0: one per hardware thread
    std::string out;
    std::string format = "json";

    template <class Opt>
    Opt budgeted(Opt opt) const {
        if (budget) opt.budget = budget;
        return opt;
    }

    unsigned effective_workers() const {
        return workers ? workers : std::max(1u, std::thread::hardware_concurrency());
    }
};

FqPtr field_from(const CommonArgs& a) {
    uint32_t e = 0, q = 1;
    while (q < a.q) {
        q *= a.p;
        ++e;
    }
    if (q != a.q || e == 0) {
        if (a.q == a.p) e = 1;
        else throw CLI::ValidationError("--q must be a positive power of --p");
    }
    return Fq::make(a.p, std::max(e, 1u));
}

std::pair<int, int> parse_range(const std::string& s) {
    auto dots = s.find("..");
    if (dots == std::string::npos) {
        int m = std::stoi(s);
        return {m, m};
    }
    return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
}

Cplx parse_complex(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) return Cplx(std::stod(s), 0.0);
    return Cplx(std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1)));
}

Place parse_place(const FqPtr& k, const std::string& s) {
    if (s == "inf" || s == "infinity") return Place::infinity(k);
    std::vector<uint32_t> cs;
    size_t at = 0;
    while (at < s.size()) {
        size_t comma = s.find(',', at);
        if (comma == std::string::npos) comma = s.size();
        cs.push_back(static_cast<uint32_t>(std::stoul(s.substr(at, comma - at))));
        at = comma + 1;
    }
    Poly pi(k, cs);
    if (!is_irreducible(pi) || !pi.is_monic())
        throw CLI::ValidationError("--place coefficients must give a monic irreducible");
    return Place::finite(pi);
}

// emit the JSON report and, when a csv twin is supplied, the csv next to it
int emit(const CommonArgs& a, const json& j, const std::optional<std::string>& csv = {}) {
    if (a.out.empty()) {
        if (a.format == "csv" && csv)
            std::cout << *csv;
        else
            std::cout << j.dump(2) << "\n";
        return 0;
    }
    {
        std::ofstream f(a.out + ".json");
        f << j.dump(2) << "\n";
    }
    if (csv) {
        std::ofstream f(a.out + ".csv");
        f << *csv;
    }
    std::cout << "wrote " << a.out << ".json" << (csv ? " and the csv twin" : "") << "\n";
    return 0;
}

void add_common(CLI::App* cmd, CommonArgs& a, bool field_args = true) {
    if (field_args) {
        cmd->add_option("--p", a.p, "field characteristic");
        cmd->add_option("--q", a.q, "field cardinality (a power of p)");
    }
    cmd->add_option("--budget", a.budget, "enumeration budget");
    cmd->add_option("--workers", a.workers, "worker threads (default: all)");
    cmd->add_option("--out", a.out, "output path prefix (writes .json/.csv)");
    cmd->add_option("--format", a.format, "stdout format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"point counts, local densities and pole data for the norm-form compactification"};
    app.require_subcommand(1);

    CommonArgs args;

    auto* places_cmd = app.add_subcommand("places", "list places up to a degree");
    int place_deg = 3;
    add_common(places_cmd, args);
    places_cmd->add_option("--trunc", place_deg, "maximum degree");

    auto* count_cmd = app.add_subcommand("count", "exact-height point counts N(M)");
    std::string m_range = "0..8";
    bool with_naive = false;
    add_common(count_cmd, args);
    count_cmd->add_option("--m", m_range, "height exponent range a..b");
    count_cmd->add_flag("--naive-check", with_naive, "cross-check against the naive scan");

    auto* density_cmd = app.add_subcommand("density", "valuation histograms and local densities");
    std::vector<std::string> place_args, s_args;
    add_common(density_cmd, args);
    density_cmd->add_option("--place", place_args,
                            "place as comma-separated modulus coefficients, or 'inf'");
    density_cmd->add_option("--s", s_args, "complex exponent re[,im] (repeatable)");

    auto* constant_cmd = app.add_subcommand("constant", "leading-constant assembly");
    int trunc = 12;
    add_common(constant_cmd, args);
    constant_cmd->add_option("--trunc", trunc, "Euler product truncation degree");

    auto* poles_cmd = app.add_subcommand("poles", "pole structure and the count prediction");
    std::vector<std::string> lambda_args;
    std::vector<int> rho_args;
    int predict_M = -1;
    double residue_arg = 0;
    add_common(poles_cmd, args);
    poles_cmd->add_option("--lambda", lambda_args, "class coordinate num[/den] per index");
    poles_cmd->add_option("--rho", rho_args, "anticanonical multiplicity per index");
    poles_cmd->add_option("--predict-m", predict_M, "also report the main term at this M");
    poles_cmd->add_option("--residue", residue_arg, "residue for the prediction");

    auto* charsum_cmd = app.add_subcommand("charsum", "twisted unit character sums");
    int cs_n = 1, cs_d = 0, cs_e = -1;
    uint32_t cs_qv = 2;
    add_common(charsum_cmd, args, false);
    charsum_cmd->add_option("--qv", cs_qv, "residue cardinality (prime power <= 256)");
    charsum_cmd->add_option("--n", cs_n, "uniformizer twist exponent");
    charsum_cmd->add_option("--d", cs_d, "power of the unit variable");
    charsum_cmd->add_option("--e", cs_e, "precision (default n*d+1)");

    auto* verify_cmd = app.add_subcommand("verify-all", "run the full verification suite");
    add_common(verify_cmd, args, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (*places_cmd) {
            FqPtr k = field_from(args);
            json j;
            j["field"] = field_json(*k);
            json arr = json::array();
            std::ostringstream csv;
            csv << "kind,degree,qv,label\n";
            for (const Place& v : places_up_to(k, place_deg)) {
                arr.push_back(place_json(v));
                csv << (v.infinite ? "infinity" : "finite") << "," << v.deg << "," << v.qv << ","
                    << v.label() << "\n";
            }
            j["places"] = arr;
            return emit(args, j, csv.str());
        }

        if (*count_cmd) {
            FqPtr k = field_from(args);
            auto [lo, hi] = parse_range(m_range);
            CountOptions opt = args.budgeted(CountOptions{});
            opt.workers = args.effective_workers();
            // row by row so a budget stop still leaves a partial report
            CountTable t;
            t.p = k->p();
            t.q = k->q();
            t.method = "structured";
            std::string budget_note;
            for (int M = lo; M <= hi; ++M) {
                try {
                    t.rows.emplace_back(M, count_points(k, M, opt));
                } catch (const budget_exceeded& ex) {
                    budget_note = ex.what();
                    break;
                }
            }
            json j = count_table_json(t);
            if (!budget_note.empty()) j["budget_exceeded"] = budget_note;
            if (with_naive && budget_note.empty()) {
                CountTable tn = build_count_table(k, lo, hi, true, opt);
                bool agree = t.rows == tn.rows;
                j["naive_agrees"] = agree;
                if (!agree) {
                    std::cerr << "naive cross-check failed\n";
                    emit(args, j, count_table_csv(t));
                    return 1;
                }
            }
            emit(args, j, count_table_csv(t));
            if (!budget_note.empty()) {
                std::cerr << "budget exceeded: " << budget_note << "\n";
                return 3;
            }
            return 0;
        }

        if (*density_cmd) {
            FqPtr k = field_from(args);
            DenefOptions opt = args.budgeted(DenefOptions{});
            std::vector<Place> places;
            if (place_args.empty()) {
                for (const Place& v : places_up_to(k, 2))
                    if (!v.infinite) places.push_back(v);
            } else {
                for (const std::string& s : place_args) places.push_back(parse_place(k, s));
            }
            std::vector<Cplx> svals;
            if (s_args.empty()) svals = {Cplx(1.0), Cplx(2.0)};
            for (const std::string& s : s_args) svals.push_back(parse_complex(s));
            json j;
            j["field"] = field_json(*k);
            json rows = json::array();
            std::ostringstream csv;
            csv << "place,s_re,s_im,closed_re,closed_im,bruteforce_re,bruteforce_im\n";
            for (const Place& v : places) {
                if (v.infinite) continue;
                json pj;
                pj["histogram"] = histogram_json(valuation_histogram(v, opt));
                json densities = json::array();
                for (Cplx s : svals) {
                    Cplx closed = local_density(v, s, DensityMethod::closed, opt);
                    Cplx brute = local_density(v, s, DensityMethod::bruteforce, opt);
                    densities.push_back(json{{"s_re", s.real()},
                                             {"s_im", s.imag()},
                                             {"closed_re", closed.real()},
                                             {"closed_im", closed.imag()},
                                             {"bruteforce_re", brute.real()},
                                             {"bruteforce_im", brute.imag()}});
                    csv << v.label() << "," << s.real() << "," << s.imag() << "," << closed.real()
                        << "," << closed.imag() << "," << brute.real() << "," << brute.imag()
                        << "\n";
                }
                pj["densities"] = densities;
                rows.push_back(pj);
            }
            j["places"] = rows;
            return emit(args, j, csv.str());
        }

        if (*constant_cmd) {
            FqPtr k = field_from(args);
            ConstantReport r = leading_constant(k, trunc);
            return emit(args, constant_json(r));
        }

        if (*poles_cmd) {
            BundleClass cls;
            if (lambda_args.empty()) lambda_args = {"1"};
            for (size_t i = 0; i < lambda_args.size(); ++i) {
                const std::string& s = lambda_args[i];
                auto slash = s.find('/');
                Rat lam = slash == std::string::npos
                              ? Rat(std::stoll(s))
                              : Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
                int rho = i < rho_args.size() ? rho_args[i] : 1;
                cls.indices.push_back({"D" + std::to_string(i), lam, rho});
            }
            PoleStructure ps = pole_structure(cls, args.q);
            json j = pole_structure_json(ps);
            if (predict_M >= 0) {
                std::vector<Cplx> residues(ps.poles.size(), Cplx(residue_arg));
                j["prediction"] = json{
                    {"M", predict_M},
                    {"value", tauberian_predict(ps.a, ps.b, ps.d, residues, args.q, predict_M)}};
            }
            return emit(args, j);
        }

        if (*charsum_cmd) {
            uint32_t p = 2;
            while (cs_qv % p) ++p;
            uint32_t e = 0, t = 1;
            while (t < cs_qv) {
                t *= p;
                ++e;
            }
            if (t != cs_qv) throw CLI::ValidationError("--qv must be a prime power");
            FqPtr k = Fq::make(p, std::max(e, 1u));
            int eff_e = cs_e > 0 ? cs_e : cs_n * cs_d + 1;
            CharSumOptions opt = args.budgeted(CharSumOptions{});
            opt.workers = args.effective_workers();
            auto u = LaurentTruncation::one(k, std::max(eff_e, 1));
            CharSumResult r = unit_character_sum(u, cs_n, cs_d, eff_e, opt);
            json j = charsum_json(r);
            j["qv"] = cs_qv;
            j["n"] = cs_n;
            j["d"] = cs_d;
            return emit(args, j);
        }

        if (*verify_cmd) {
            AcceptanceOptions opt;
            opt.workers = args.effective_workers();
            auto results = run_acceptance(std::cout, opt);
            if (!args.out.empty()) {
                json j = json::array();
                for (auto& r : results)
                    j.push_back(json{{"id", r.id},
                                     {"name", r.name},
                                     {"passed", r.passed},
                                     {"detail", r.detail},
                                     {"seconds", r.seconds}});
                std::ofstream f(args.out + ".json");
                f << j.dump(2) << "\n";
            }
            return all_passed(results) ? 0 : 1;
        }
    } catch (const budget_exceeded& ex) {
        std::cerr << "budget exceeded: " << ex.what() << "\n";
        return 3;
    } catch (const CLI::ValidationError& ex) {
        std::cerr << "invalid arguments: " << ex.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& ex) {
        std::cerr << "invalid arguments: " << ex.what() << "\n";
        return 2;
    } catch (const std::out_of_range& ex) {
        std::cerr << "invalid arguments: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 0;
}
