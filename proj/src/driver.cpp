#include "iep/driver.hpp"

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace iep {

namespace {

using ordered_json = nlohmann::ordered_json;

Int json_to_int(const ordered_json& j, const std::string& what) {
    try {
        if (j.is_number_integer()) return Int(static_cast<long>(j.get<int64_t>()));
        if (j.is_string()) return Int(j.get<std::string>());
    } catch (const std::exception&) {
    }
    throw config_error("expected an integer for " + what);
}

Rat json_to_rat(const ordered_json& j, const std::string& what) {
    try {
        if (j.is_number_integer()) return Rat(static_cast<long>(j.get<int64_t>()));
        if (j.is_string()) return parse_rat(j.get<std::string>());
    } catch (const config_error&) {
        throw;
    } catch (const std::exception&) {
    }
    throw config_error("expected a rational for " + what);
}

template <size_t N>
std::array<std::array<Rat, N>, N> json_to_matrix(const ordered_json& j, const std::string& what) {
    if (!j.is_array() || j.size() != N)
        throw config_error(what + " must be a " + std::to_string(N) + "x" + std::to_string(N) +
                           " matrix");
    std::array<std::array<Rat, N>, N> m{};
    for (size_t r = 0; r < N; ++r) {
        if (!j[r].is_array() || j[r].size() != N)
            throw config_error(what + " must be a " + std::to_string(N) + "x" + std::to_string(N) +
                               " matrix");
        for (size_t c = 0; c < N; ++c) m[r][c] = json_to_rat(j[r][c], what);
    }
    return m;
}

FieldSpec parse_field(const ordered_json& j) {
    FieldSpec f;
    if (!j.is_object()) throw config_error("'field' must be an object");
    f.A = json_to_int(j.at("A"), "field.A");
    f.B = json_to_int(j.at("B"), "field.B");
    f.C = json_to_int(j.at("C"), "field.C");
    const std::string mode = j.value("mode", std::string("imaginary_quadratic"));
    if (mode == "generic")
        f.mode = Mode::generic;
    else if (mode == "imaginary_quadratic")
        f.mode = Mode::imaginary_quadratic;
    else
        throw config_error("field.mode must be 'generic' or 'imaginary_quadratic'");
    if (f.mode == Mode::imaginary_quadratic) {
        f.D = json_to_int(j.at("D"), "field.D");
        if (j.contains("f")) f.f = json_to_int(j.at("f"), "field.f");
    }
    const std::string zeta = j.value("zeta", std::string("none"));
    if (zeta == "none")
        f.zeta = ZetaFlag::none;
    else if (zeta == "zeta4")
        f.zeta = ZetaFlag::zeta4;
    else if (zeta == "zeta7")
        f.zeta = ZetaFlag::zeta7;
    else
        throw config_error("field.zeta must be none|zeta4|zeta7");

    f.basis_Oplus = mat3_identity();
    if (j.contains("basis_Oplus")) f.basis_Oplus = json_to_matrix<3>(j.at("basis_Oplus"), "basis_Oplus");
    if (j.contains("basis_O_eta")) f.basis_O_eta = json_to_matrix<6>(j.at("basis_O_eta"), "basis_O_eta");
    if (j.contains("basis_quad")) {
        const auto& bq = j.at("basis_quad");
        if (!bq.is_array() || bq.size() != 2) throw config_error("basis_quad must have 2 entries");
        f.basis_quad = {{json_to_rat(bq[0], "basis_quad"), json_to_rat(bq[1], "basis_quad")}};
    }
    if (j.contains("automorphisms")) {
        for (const auto& t : j.at("automorphisms")) {
            if (!t.is_array() || t.size() != 3)
                throw config_error("each automorphism is a triple (a0,a1,a2)");
            f.automorphisms.push_back({json_to_rat(t[0], "automorphism"),
                                       json_to_rat(t[1], "automorphism"),
                                       json_to_rat(t[2], "automorphism")});
        }
    }
    if (j.contains("index_OK_O")) f.index_OK_O = json_to_int(j.at("index_OK_O"), "index_OK_O");
    if (j.contains("pre_excluded_primes"))
        for (const auto& p : j.at("pre_excluded_primes"))
            f.pre_excluded_primes.push_back(json_to_int(p, "pre_excluded_primes"));
    if (j.contains("over_orders_plus"))
        for (const auto& m : j.at("over_orders_plus"))
            f.over_orders_plus.push_back(json_to_matrix<3>(m, "over_orders_plus"));
    if (j.contains("over_orders_full"))
        for (const auto& m : j.at("over_orders_full"))
            f.over_orders_full.push_back(json_to_matrix<6>(m, "over_orders_full"));
    if (j.contains("over_orders_quad")) {
        for (const auto& t : j.at("over_orders_quad")) {
            if (!t.is_array() || t.size() != 2)
                throw config_error("over_orders_quad entries are (c0,c1) pairs");
            f.over_orders_quad.push_back(
                {json_to_rat(t[0], "over_orders_quad"), json_to_rat(t[1], "over_orders_quad")});
        }
    }
    return f;
}

std::vector<std::vector<Rat>> rows_of3(const Mat3q& m) {
    std::vector<std::vector<Rat>> rows;
    for (const auto& r : m) rows.push_back({r.begin(), r.end()});
    return rows;
}

std::vector<std::vector<Rat>> rows_of6(const Mat6q& m) {
    std::vector<std::vector<Rat>> rows;
    for (const auto& r : m) rows.push_back({r.begin(), r.end()});
    return rows;
}

// ---- persistent caches (IEP_CACHE_DIR) ------------------------------------

std::string order_tag(const MaximalOrder& R) {
    std::string m;
    for (const auto& row : R.M)
        for (const auto& e : row) m += rat_to_string(e) + ";";
    return "p" + R.params.p.get_str() + "_q" + R.params.q.get_str() + "_" +
           std::to_string(std::hash<std::string>{}(m));
}

std::string cache_dir() {
    const char* d = std::getenv("IEP_CACHE_DIR");
    return d ? std::string(d) : std::string();
}

struct NormElementCache {
    const MaximalOrder& R;
    std::string dir = cache_dir();
    std::map<Int, std::shared_ptr<const std::vector<Quat>>> mem;

    explicit NormElementCache(const MaximalOrder& R_) : R(R_) {}

    std::shared_ptr<const std::vector<Quat>> get(const Int& N) {
        auto it = mem.find(N);
        if (it != mem.end()) return it->second;
        std::shared_ptr<const std::vector<Quat>> value;
        if (!dir.empty()) value = load(N);
        if (!value) {
            value = std::make_shared<const std::vector<Quat>>(elements_with_norm_trace0(R, N));
            if (!dir.empty()) store(N, *value);
        }
        mem.emplace(N, value);
        return value;
    }

    std::filesystem::path file(const Int& N) const {
        return std::filesystem::path(dir) / ("norm_" + order_tag(R) + "_N" + N.get_str() + ".json");
    }

    std::shared_ptr<const std::vector<Quat>> load(const Int& N) const {
        std::ifstream in(file(N));
        if (!in) return nullptr;
        try {
            ordered_json j = ordered_json::parse(in);
            std::vector<Quat> v;
            for (const auto& e : j.at("elements")) {
                Quat y = quat_from_coords(R.params, parse_rat(e[0].get<std::string>()),
                                          parse_rat(e[1].get<std::string>()),
                                          parse_rat(e[2].get<std::string>()),
                                          parse_rat(e[3].get<std::string>()));
                if (!membership(R, y) || quat_trace(y) != 0 || quat_norm(y) != N) return nullptr;
                v.push_back(std::move(y));
            }
            return std::make_shared<const std::vector<Quat>>(std::move(v));
        } catch (const std::exception&) {
            return nullptr;  // stale or foreign file: recompute
        }
    }

    void store(const Int& N, const std::vector<Quat>& v) const {
        std::error_code ec;
        std::filesystem::create_directories(dir, ec);
        ordered_json j;
        j["elements"] = ordered_json::array();
        for (const Quat& y : v) {
            j["elements"].push_back({rat_to_string(y.u), rat_to_string(y.v), rat_to_string(y.w),
                                     rat_to_string(y.t)});
        }
        std::ofstream out(file(N));
        out << j.dump() << "\n";
    }
};

// ---- the per-prime pipeline ------------------------------------------------

bool check_optimal(const FieldSpec& field, const Int& p, const std::vector<QuatMat3>& monomials,
                   const std::vector<std::vector<std::vector<Rat>>>& over_order_rows,
                   const MaximalOrder& R, const Int& n, const char* stage) {
    if (index_is_p_power(field.index_OK_O, p)) return true;
    if (over_order_rows.empty())
        throw config_error(std::string("optimality check at ") + stage +
                           " needs over-order bases: [O_K:O] is not a power of p");
    for (const auto& rows : over_order_rows)
        if (lifts_to_basis(monomials, rows, R, n)) return false;
    return true;
}

PrimeResult run_prime(const RunConfig& cfg, const std::vector<Septuple>& septuples, const Int& p,
                      ordered_json* dump) {
    const FieldSpec& field = cfg.field;
    PrimeResult res;
    res.p = p;
    try {
        const MaximalOrder R = build_maximal_order(p);
        const AchievableSet ach = achievable_norms(R, p);
        res.counters.septuples = septuples.size();

        std::vector<std::vector<std::vector<Rat>>> over_plus;
        for (const auto& m : field.over_orders_plus) over_plus.push_back(rows_of3(m));

        // step 3: keep septuples lifting to O_+ and optimal
        std::vector<Septuple> live;
        for (const Septuple& s : septuples) {
            const auto mono = oplus_monomials(R.params, s);
            if (!lifts_to_basis(mono, rows_of3(field.basis_Oplus), R, s.n)) continue;
            if (!check_optimal(field, p, mono, over_plus, R, s.n, "O_+")) continue;
            live.push_back(s);
        }
        res.counters.septuples_after_lift = live.size();

        NormElementCache cache(R);
        std::vector<NormalSolution> sols;

        for (const Septuple& s : live) {
            if (!septuple_feasible_at(field, s, p, cfg.allow_zero_disc_profiles)) continue;

            const bool imaginary = field.mode == Mode::imaginary_quadratic;
            const bool allzero_ok = imaginary ? divides(p, field.f * field.D * s.n)
                                              : cfg.allow_zero_disc_profiles;
            auto profiles = imaginary
                                ? enumerate_profiles_imaginary(s, p, ach, field.mf2D, allzero_ok)
                                : enumerate_profiles_generic(s, p, ach, allzero_ok);
            profiles = apply_structural_filters(std::move(profiles), field, p, s);
            res.counters.profiles += profiles.size();

            for (const NormTraceProfile& prof : profiles) {
                const auto l1 = cache.get(prof.N1);
                const auto l2 = cache.get(prof.N2);
                const auto l3 = cache.get(prof.N3);
                const auto triples = assemble_triples(*l1, *l2, *l3, prof);
                res.counters.triples += triples.size();

                for (const auto& tr : triples) {
                    // step 7: lift to O (generic) / O cap Z[sqrt(D)] (imaginary)
                    if (imaginary) {
                        const auto mono = quad_monomials(R.params, s, tr);
                        const std::vector<std::vector<Rat>> wrow = {
                            {(*field.basis_quad)[0], (*field.basis_quad)[1]}};
                        if (!lifts_to_basis(mono, wrow, R, s.n)) continue;
                        std::vector<std::vector<std::vector<Rat>>> over;
                        for (const auto& t : field.over_orders_quad)
                            over.push_back({{t[0], t[1]}});
                        if (!check_optimal(field, p, mono, over, R, s.n, "O cap Z[sqrt(D)]"))
                            continue;
                    } else {
                        const auto mono = eta_monomials(R.params, s, tr);
                        Mat6q T{};
                        for (int i = 0; i < 6; ++i)
                            for (int j = 0; j < 6; ++j) T[i][j] = (i == j) ? 1 : 0;
                        if (field.basis_O_eta) T = *field.basis_O_eta;
                        if (!lifts_to_basis(mono, rows_of6(T), R, s.n)) continue;
                        std::vector<std::vector<std::vector<Rat>>> over;
                        for (const auto& m : field.over_orders_full) over.push_back(rows_of6(m));
                        if (!check_optimal(field, p, mono, over, R, s.n, "O")) continue;
                    }

                    if (!lambda_identities_hold(field, s, tr))
                        throw internal_error("emitted solution violates a Lambda identity");
                    const auto [d123, dij] = suborder_discs(tr[0], tr[1], tr[2]);
                    if (d123 != disc123_from_profile(prof.N1, prof.N2, prof.N3, prof.T12,
                                                     prof.T13, prof.T23))
                        throw internal_error("disc(R_123) mismatch between profile and triple");
                    (void)dij;
                    sols.push_back(NormalSolution{s, tr, prof, p});
                }
            }
        }
        res.counters.solutions = sols.size();
        res.classes = dedupe(sols, field, R, cfg.strict_equivalence);
        res.counters.classes = res.classes.size();

        if (dump) {
            ordered_json d;
            d["p"] = p.get_str();
            d["live_septuples"] = ordered_json::array();
            for (const auto& s : live) {
                ordered_json row = ordered_json::array();
                for (const Int& v : s.as_array()) row.push_back(v.get_str());
                d["live_septuples"].push_back(row);
            }
            d["solutions"] = res.counters.solutions;
            *dump = std::move(d);
        }
    } catch (const internal_error& e) {
        res.error = e.what();
        res.internal_failure = true;
    } catch (const std::exception& e) {
        res.error = e.what();
    }
    return res;
}

ordered_json quat_json(const Quat& y, const MaximalOrder* R) {
    ordered_json j;
    j["coords"] = {rat_to_string(y.u), rat_to_string(y.v), rat_to_string(y.w), rat_to_string(y.t)};
    if (R) {
        if (auto oc = order_coords(*R, y)) {
            ordered_json v = ordered_json::array();
            for (const Int& c : *oc) v.push_back(c.get_str());
            j["order_coords"] = v;
        }
    }
    return j;
}

ordered_json int_array_json(const std::vector<Int>& v) {
    ordered_json j = ordered_json::array();
    for (const Int& x : v) j.push_back(x.get_str());
    return j;
}

template <size_t N>
ordered_json int_array_json(const std::array<Int, N>& v) {
    ordered_json j = ordered_json::array();
    for (const Int& x : v) j.push_back(x.get_str());
    return j;
}

}  // namespace

RunConfig parse_config_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw config_error(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("field")) throw config_error("config needs a 'field' object");
    RunConfig cfg;
    cfg.field = validate(parse_field(j.at("field")));
    if (j.contains("primes") && !j.at("primes").is_null()) {
        const auto& pj = j.at("primes");
        if (pj.is_string()) {
            if (pj.get<std::string>() != "auto")
                throw config_error("primes must be 'auto' or a list");
        } else if (pj.is_array()) {
            std::vector<Int> ps;
            for (const auto& e : pj) {
                Int p = json_to_int(e, "primes");
                if (p < 2) throw config_error("primes must all be >= 2");
                ps.push_back(p);
            }
            cfg.primes = std::move(ps);
        } else {
            throw config_error("primes must be 'auto' or a list");
        }
    }
    cfg.strict_equivalence = j.value("strict_equivalence", false);
    cfg.include_two = j.value("include_two", true);
    cfg.allow_zero_disc_profiles = j.value("allow_zero_disc_profiles", false);
    cfg.jobs = j.value("jobs", 1);
    if (cfg.jobs < 1) throw config_error("jobs must be >= 1");
    cfg.output = j.value("output", std::string());
    cfg.format = j.value("format", std::string("json"));
    if (cfg.format != "json" && cfg.format != "csv")
        throw config_error("format must be json or csv");
    cfg.stage_dump = j.value("stage_dump", std::string());
    return cfg;
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open config file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config_json(ss.str());
}

SolutionReport run(const RunConfig& config) {
    if (!config.field.validated) throw config_error("field spec not validated");
    const FieldSpec& field = config.field;

    const auto septuples = enumerate_septuples(field.A, field.B, field.C);
    SolutionReport report;
    report.budget = prime_budget(field, septuples, config.include_two);

    if (config.primes) {
        report.primes_run = *config.primes;
        std::sort(report.primes_run.begin(), report.primes_run.end());
        report.primes_run.erase(std::unique(report.primes_run.begin(), report.primes_run.end()),
                                report.primes_run.end());
        for (const Int& p : report.primes_run)
            if (!is_prime(p)) throw config_error("requested prime " + p.get_str() + " is not prime");
    } else {
        report.primes_run = report.budget.candidate_primes;
    }

    report.per_prime.resize(report.primes_run.size());
    std::vector<ordered_json> dumps(config.stage_dump.empty() ? 0 : report.primes_run.size());

    const size_t nthreads =
        std::min<size_t>(std::max(1, config.jobs), std::max<size_t>(1, report.primes_run.size()));
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= report.primes_run.size()) return;
            report.per_prime[i] =
                run_prime(config, septuples, report.primes_run[i],
                          config.stage_dump.empty() ? nullptr : &dumps[i]);
        }
    };
    if (nthreads <= 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        for (size_t t = 0; t < nthreads; ++t) threads.emplace_back(worker);
        for (auto& t : threads) t.join();
    }

    for (const auto& pr : report.per_prime)
        if (!pr.classes.empty()) report.totals[pr.p] = pr.classes.size();

    if (!config.stage_dump.empty()) {
        ordered_json all = ordered_json::array();
        for (auto& d : dumps) all.push_back(std::move(d));
        std::ofstream out(config.stage_dump);
        out << all.dump(2) << "\n";
    }
    return report;
}

std::string serialize_report(const SolutionReport& report, const RunConfig& config,
                             const std::string& format) {
    const FieldSpec& field = config.field;
    if (format == "csv") {
        std::ostringstream out;
        out << "p,x,dn,a,cn,b,gamma,n,N1,N2,N3,T12,T13,T23,class_size,raw_solutions,presumed_"
               "merge,y1,y2,y3\n";
        for (const auto& pr : report.per_prime) {
            for (const auto& cls : pr.classes) {
                const auto& rep = cls.representative;
                out << pr.p.get_str();
                for (const Int& v : rep.s.as_array()) out << "," << v.get_str();
                for (const Int& v : rep.profile.as_array()) out << "," << v.get_str();
                out << "," << cls.size << "," << pr.counters.solutions << ","
                    << (cls.presumed_merge ? 1 : 0);
                for (const Quat& y : rep.triple) {
                    out << ",\"" << rat_to_string(y.u) << ";" << rat_to_string(y.v) << ";"
                        << rat_to_string(y.w) << ";" << rat_to_string(y.t) << "\"";
                }
                out << "\n";
            }
        }
        return out.str();
    }
    if (format != "json") throw config_error("format must be json or csv");

    ordered_json j;
    {
        ordered_json fj;
        fj["A"] = field.A.get_str();
        fj["B"] = field.B.get_str();
        fj["C"] = field.C.get_str();
        fj["mode"] = field.mode == Mode::generic ? "generic" : "imaginary_quadratic";
        if (field.mode == Mode::imaginary_quadratic) {
            fj["D"] = field.D.get_str();
            fj["f"] = field.f.get_str();
        }
        fj["zeta"] = field.zeta == ZetaFlag::none ? "none"
                     : field.zeta == ZetaFlag::zeta4 ? "zeta4" : "zeta7";
        fj["index_OK_O"] = field.index_OK_O.get_str();
        j["field"] = std::move(fj);
    }
    {
        ordered_json bj;
        bj["case"] = report.budget.kind == BudgetCase::zeta_root ? "i"
                     : report.budget.kind == BudgetCase::imaginary ? "ii" : "iii";
        bj["theoretical_bound"] = report.budget.theoretical_bound.get_str();
        bj["practical_bound"] = report.budget.practical_bound.get_str();
        bj["candidate_primes"] = int_array_json(report.budget.candidate_primes);
        j["budget"] = std::move(bj);
    }
    j["primes_run"] = int_array_json(report.primes_run);
    j["primes"] = ordered_json::array();
    for (const auto& pr : report.per_prime) {
        ordered_json pj;
        pj["p"] = pr.p.get_str();
        if (!pr.error.empty()) {
            pj["error"] = pr.error;
            pj["internal"] = pr.internal_failure;
            j["primes"].push_back(std::move(pj));
            continue;
        }
        ordered_json cj;
        cj["septuples"] = pr.counters.septuples;
        cj["septuples_after_lift"] = pr.counters.septuples_after_lift;
        cj["profiles"] = pr.counters.profiles;
        cj["triples"] = pr.counters.triples;
        cj["solutions"] = pr.counters.solutions;
        cj["classes"] = pr.counters.classes;
        pj["counters"] = std::move(cj);
        pj["classes"] = ordered_json::array();

        // order coordinates belong in the report; rebuild the order once
        std::optional<MaximalOrder> R;
        if (!pr.classes.empty()) R = build_maximal_order(pr.p);
        for (const auto& cls : pr.classes) {
            ordered_json c;
            ordered_json rep;
            rep["septuple"] = int_array_json(cls.representative.s.as_array());
            rep["profile"] = int_array_json(cls.representative.profile.as_array());
            rep["triple"] = ordered_json::array();
            for (const Quat& y : cls.representative.triple)
                rep["triple"].push_back(quat_json(y, R ? &*R : nullptr));
            c["representative"] = std::move(rep);
            c["size"] = cls.size;
            c["presumed_merge"] = cls.presumed_merge;
            c["member_septuples"] = ordered_json::array();
            for (const auto& s : cls.member_septuples)
                c["member_septuples"].push_back(int_array_json(s.as_array()));
            pj["classes"].push_back(std::move(c));
        }
        j["primes"].push_back(std::move(pj));
    }
    ordered_json totals;
    for (const auto& [p, count] : report.totals) totals[p.get_str()] = count;
    j["totals"] = std::move(totals);
    return j.dump(2) + "\n";
}

}  // namespace iep
