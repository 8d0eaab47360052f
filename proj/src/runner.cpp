#include "jlq/runner.hpp"

#include <chrono>
#include <fstream>
#include <iostream>

#include "jlq/engine.hpp"
#include "jlq/level_io.hpp"
#include "jlq/oracles.hpp"
#include "jlq/report.hpp"
#include "jlq/verifier.hpp"

namespace jlq {
namespace {

double seconds_since(const std::chrono::steady_clock::time_point& start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int run_compute(const ComputeConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        CacheDir dir(cfg.cache_dir);
        LevelCache cache(dir);
        cache.set_threads(cfg.threads);
        std::size_t fresh = 0;
        cache.ensure_through(cfg.max_n, [&](const LevelTable& level) {
            ++fresh;
            out << "level " << level.weight() << ": " << level.size()
                << " polynomials, max degree " << level.max_degree() << '\n';
        });
        std::size_t records = 0;
        for (const auto& [n, entry] : dir.manifest())
            if (n <= cfg.max_n) records += entry.records;
        out << "cache " << dir.path().string() << ": levels 1.." << cfg.max_n << " present, "
            << records << " records (" << fresh << " levels computed this run)\n";
        return kExitOk;
    } catch (const NegativePowerResidue& e) {
        err << "engine error (negative power residue): " << e.what() << '\n';
        return kExitTheoremFailure;
    } catch (const InexactDivision& e) {
        err << "engine error (inexact division): " << e.what() << '\n';
        return kExitTheoremFailure;
    } catch (const CacheError& e) {
        err << "cache error: " << e.what() << '\n';
        return kExitEnvironmentError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitEnvironmentError;
    }
}

int run_verify(const VerifyRunConfig& cfg, std::ostream& out, std::ostream& err) {
    const auto start = std::chrono::steady_clock::now();
    try {
        CacheDir dir(cfg.cache_dir);
        for (unsigned n = 1; n <= cfg.max_n; ++n)
            if (!dir.has_level(n))
                throw CacheError("level " + std::to_string(n) +
                                 " missing from cache; run compute first");
        LevelCache cache(dir);
        cache.set_threads(cfg.threads);

        VerifyOptions options;
        options.max_n = cfg.max_n;
        options.cross_route_max = std::min(cfg.cross_route_max, cfg.max_n);
        options.family_max = std::min(cfg.family_max, cfg.max_n);
        options.dominance_pair_max = std::min(cfg.dominance_pair_max, cfg.max_n);
        options.threads = cfg.threads;
        const VerifyOutcome outcome = run_all_checks(cache, options);

        const nlohmann::json config{
            {"command", "verify"},
            {"max_n", cfg.max_n},
            {"strict", cfg.strict},
            {"cross_route_max", options.cross_route_max},
            {"family_max", options.family_max},
            {"dominance_pair_max", options.dominance_pair_max},
        };
        const nlohmann::json report = make_report(config, outcome, seconds_since(start));
        validate_report(report);
        {
            std::ofstream file(cfg.report_path);
            if (!file) throw CacheError("cannot write report to " + cfg.report_path.string());
            file << report.dump(2) << '\n';
        }

        out << "checked " << outcome.polynomials_checked << " polynomials through n="
            << cfg.max_n << ", max degree " << outcome.max_degree << '\n';
        out << "check records: " << outcome.records.size() << " (theorem failures "
            << outcome.theorem_failures << ", conjecture failures "
            << outcome.conjecture_failures << ", finding records failing "
            << outcome.finding_failures << ")\n";
        for (const auto& rec : outcome.records)
            if (!rec.pass && rec.kind != CheckKind::Finding)
                out << "FAIL [" << check_kind_name(rec.kind) << "] " << rec.subject << " "
                    << rec.check << ": " << rec.witness << '\n';
        out << "report written to " << cfg.report_path.string() << '\n';

        if (outcome.theorem_failures) return kExitTheoremFailure;
        if (cfg.strict && outcome.conjecture_failures) return kExitConjectureFailure;
        return kExitOk;
    } catch (const NegativePowerResidue& e) {
        err << "engine error (negative power residue): " << e.what() << '\n';
        return kExitTheoremFailure;
    } catch (const InexactDivision& e) {
        err << "engine error (inexact division): " << e.what() << '\n';
        return kExitTheoremFailure;
    } catch (const CacheError& e) {
        err << "cache error: " << e.what() << '\n';
        return kExitEnvironmentError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitEnvironmentError;
    }
}

int run_oracle(const OracleConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        LevelCache cache;  // oracle comparisons run from a fresh in-memory engine
        cache.set_threads(cfg.threads);
        switch (cfg.kind) {
            case OracleKind::Trees: {
                const IntPoly oracle = tree_inversion_poly(cfg.n, cfg.threads);
                cache.ensure_through(cfg.n);
                const IntPoly& engine =
                    cache.level(cfg.n)->at(Partition(std::vector<unsigned>{cfg.n}));
                if (oracle == engine) {
                    out << "trees n=" << cfg.n << ": match (J_n = " << engine.to_string()
                        << ")\n";
                    return kExitOk;
                }
                out << "trees n=" << cfg.n << ": MISMATCH\n  oracle " << oracle.to_string()
                    << "\n  engine " << engine.to_string() << '\n';
                return kExitTheoremFailure;
            }
            case OracleKind::Tutte: {
                if (cfg.r < 1 || cfg.r > cfg.n)
                    throw std::invalid_argument("tutte oracle needs 1 <= r <= n");
                cache.ensure_through(cfg.n);
                const IntPoly engine = jnr_aggregate(cfg.n, cfg.r, *cache.level(cfg.n));
                const IntPoly oracle = tutte_I(cfg.n - cfg.r, cfg.r, 1, cfg.threads);
                if (oracle == engine) {
                    out << "tutte n=" << cfg.n << " r=" << cfg.r << ": match (J_n^(r) = "
                        << engine.to_string() << ")\n";
                    return kExitOk;
                }
                out << "tutte n=" << cfg.n << " r=" << cfg.r << ": MISMATCH\n  oracle "
                    << oracle.to_string() << "\n  engine " << engine.to_string() << '\n';
                return kExitTheoremFailure;
            }
            case OracleKind::SymFunc: {
                cache.ensure_through(cfg.n);
                auto level = cache.level(cfg.n);
                Specialization spec;
                bool all_ok = true;
                for (std::size_t i = 0; i < level->size(); ++i) {
                    const Partition& lam = level->partition(i);
                    const auto report = verify_factorization(lam, level->poly(i), spec);
                    if (report.all_pass()) {
                        out << "symfunc " << lam.to_string() << ": pass\n";
                    } else {
                        all_ok = false;
                        out << "symfunc " << lam.to_string() << ": FAIL\n";
                        for (const auto& clause : report.clauses)
                            if (!clause.pass)
                                out << "  " << clause.name << ": " << clause.witness << '\n';
                    }
                }
                return all_ok ? kExitOk : kExitTheoremFailure;
            }
        }
        return kExitEnvironmentError;
    } catch (const ResourceGuard& e) {
        err << "resource guard: " << e.what() << '\n';
        return kExitEnvironmentError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitEnvironmentError;
    }
}

int run_show(const ShowConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        const Partition lambda = Partition::parse(cfg.partition_text);
        CacheDir dir(cfg.cache_dir);
        if (!dir.has_level(lambda.weight()))
            throw CacheError("level " + std::to_string(lambda.weight()) + " not in cache");
        const LevelTable level = dir.load_level(lambda.weight());
        const IntPoly& j = level.at(lambda);
        const auto [delta, reduced] = j.content_split();
        const SequenceFlags flags = conjecture_checks(j);

        out << "partition: " << lambda.to_string() << '\n';
        out << "J: " << j.to_string() << '\n';
        out << "degree: " << (j.is_zero() ? 0 : j.degree()) << '\n';
        out << "delta: " << delta.get_str() << '\n';
        out << "J_reduced: " << reduced.to_string() << '\n';
        out << "reduced_monic: " << (reduced.leading() == 1 ? "yes" : "no") << '\n';
        auto yn = [](bool b) { return b ? "yes" : "no"; };
        out << "strictly_positive: " << yn(flags.positive) << '\n';
        out << "log_concave: " << yn(flags.log_concave) << '\n';
        out << "strictly_log_concave: " << yn(flags.strictly_log_concave) << '\n';
        out << "unimodal: " << yn(flags.unimodal) << '\n';
        out << "no_internal_zeros: " << yn(flags.no_internal_zeros) << '\n';

        bool structure_ok = true;
        for (const auto& rec : structure_check(lambda, j)) structure_ok &= rec.pass;
        out << "structure: " << (structure_ok ? "pass" : "FAIL") << '\n';
        if (lambda.weight() >= 2 && lambda.length() != lambda.weight())
            out << "pascal_tail: " << (pascal_tail_check(lambda, j).pass ? "pass" : "FAIL")
                << '\n';
        return kExitOk;
    } catch (const std::invalid_argument& e) {
        err << "bad partition: " << e.what() << '\n';
        return kExitEnvironmentError;
    } catch (const CacheError& e) {
        err << "cache error: " << e.what() << '\n';
        return kExitEnvironmentError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitEnvironmentError;
    }
}

int run_report(const ReportRenderConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        std::ifstream in(cfg.input);
        if (!in) throw CacheError("cannot read report " + cfg.input.string());
        nlohmann::json report;
        in >> report;
        validate_report(report);
        if (cfg.format == "json")
            out << report.dump(2) << '\n';
        else if (cfg.format == "csv")
            out << render_report_csv(report);
        else
            throw std::invalid_argument("unknown report format '" + cfg.format + "'");
        return kExitOk;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitEnvironmentError;
    }
}

}  // namespace jlq
