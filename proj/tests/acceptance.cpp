// Acceptance gate: one line per criterion, PASS or FAIL, exit 0 only when
// everything passes. Criteria 1-6 drive the library directly (with the
// independent oracles from support/), criterion 3 additionally reproduces
// the result through the CLI, and criterion 7 sweeps the CLI over the whole
// input corpus twice. Run as
//   acceptance <path-to-cli> <data-dir>

#include <algorithm>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "support/graphgen.hpp"
#include "support/oracles.hpp"
#include "support/run_cli.hpp"
#include "tailocus/branches.hpp"
#include "tailocus/dualgraph.hpp"
#include "tailocus/io.hpp"
#include "tailocus/smoothcheck.hpp"
#include "tailocus/strata.hpp"

using namespace tailocus;

namespace {

bool criterion(int number, const std::string& title, const std::function<bool()>& body) {
    bool ok = false;
    try {
        ok = body();
    } catch (const std::exception& e) {
        std::cout << "FAIL  " << number << ". " << title << " (threw: " << e.what() << ")\n";
        return false;
    }
    std::cout << (ok ? "PASS  " : "FAIL  ") << number << ". " << title << "\n";
    return ok;
}

bool annihilates(const RatVector& coeffs, const RatMatrix& vectors) {
    if (coeffs.size() != vectors.size()) return false;
    bool nonzero = false;
    for (const auto& c : coeffs) {
        if (c != 0) nonzero = true;
    }
    if (!nonzero) return false;
    const std::size_t width = vectors.empty() ? 0 : vectors[0].size();
    for (std::size_t j = 0; j < width; ++j) {
        Rational sum = 0;
        for (std::size_t i = 0; i < vectors.size(); ++i) sum += coeffs[i] * vectors[i][j];
        if (sum != 0) return false;
    }
    return true;
}

// verdict sanity shared by every criterion-4 case: a smoothable case (ii)
// must carry an exact dependence, an unsmoothable one a full-rank minor
bool certificate_sound(const SmoothabilityVerdict& verdict, const RatMatrix& vectors) {
    if (verdict.smoothable) {
        return verdict.certificate.type == Certificate::Type::dependence &&
               annihilates(verdict.certificate.dependence, vectors);
    }
    return verdict.certificate.type == Certificate::Type::independent &&
           verdict.certificate.pivot_cols.size() == verdict.m;
}

RatMatrix tangent_rows(const std::vector<ParamTail>& tails) {
    RatMatrix rows;
    for (const auto& tail : tails) rows.push_back(tangent_vector(tail));
    return rows;
}

StratumIndex idx_of(int m_prime, std::vector<std::int64_t> mu, std::vector<int> S = {}) {
    StratumIndex idx;
    idx.m_prime = m_prime;
    idx.mu = std::move(mu);
    idx.S = std::move(S);
    return idx;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: acceptance <cli-binary> <data-dir>\n";
        return 2;
    }
    const std::string cli = argv[1];
    const std::string data = argv[2];
    const ModuliContext cubics{2, 3, 0};
    bool all = true;

    all &= criterion(1, "plane-cubics dimensions are exactly 9 / 10 / 9 / 8", [&] {
        if (main_dimension(cubics) != 9) return false;
        return stratum_dimension(idx_of(1, {3}), cubics) == 10 &&
               stratum_dimension(idx_of(2, {2, 1}), cubics) == 9 &&
               stratum_dimension(idx_of(3, {1, 1, 1}), cubics) == 8;
    });

    all &= criterion(2, "plane-cubics classification flags", [&] {
        return dimension_obstructed(idx_of(1, {3}), cubics) &&
               dimension_obstructed(idx_of(2, {2, 1}), cubics) &&
               !dimension_obstructed(idx_of(3, {1, 1, 1}), cubics) &&
               generically_in_main(idx_of(3, {1, 1, 1}), cubics);
    });

    all &= criterion(3, "four-tail branch lattice: counts {2,3,3,4}, 3-tail pair separates at stage 2", [&] {
        const auto g = make_graph(
            2, 0,
            {{"E0", 1, 0, {}},
             {"R1", 0, 0, {}},
             {"R2", 0, 0, {}},
             {"t1", 0, 1, {}},
             {"t2", 0, 1, {}},
             {"t3", 0, 1, {}},
             {"t4", 0, 1, {}}},
            {{"E0", "R1"}, {"E0", "R2"}, {"R1", "t1"}, {"R1", "t2"}, {"R2", "t3"}, {"R2", "t4"}});
        const auto branches = enumerate_branches(g);
        if (branches.size() != 4) return false;
        std::vector<std::int64_t> counts;
        for (const auto& branch : branches) counts.push_back(tail_count(g, branch));
        if (counts != std::vector<std::int64_t>{2, 3, 3, 4}) return false;
        if (separation_stage(g, branches[1], branches[2]) != 2) return false;

        // the same numbers through the CLI
        const auto r = clitest::run(cli + " branches " + data +
                                    "/four_tails.json --format json 2>/dev/null");
        if (r.code != 0) return false;
        const auto j = Json::parse(r.output);
        if (j["branches"].size() != 4) return false;
        for (std::size_t i = 0; i < 4; ++i) {
            if (j["branches"][i]["tail_count"] != counts[i]) return false;
        }
        for (const auto& s : j["separations"]) {
            if (s["a"] == 1 && s["b"] == 2 && s["stage"] != 2) return false;
        }
        return true;
    });

    all &= criterion(4, "smoothability suite with exact certificates", [&] {
        const auto one_tail =
            make_graph(2, 0, {{"E", 1, 0, {}}, {"T", 0, 3, {}}}, {{"E", "T"}});
        const auto two_tail = make_graph(
            2, 0, {{"E", 1, 0, {}}, {"A", 0, 2, {}}, {"B", 0, 1, {}}},
            {{"E", "A"}, {"E", "B"}});
        auto three_tail = [](int n) {
            return make_graph(
                n, 0,
                {{"E", 1, 0, {}}, {"L1", 0, 1, {}}, {"L2", 0, 1, {}}, {"L3", 0, 1, {}}},
                {{"E", "L1"}, {"E", "L2"}, {"E", "L3"}});
        };

        const ParamTail cusp{{{0, 0, 1}, {0, 0, 0, 1}}};
        const ParamTail immersed{{{0, 1}, {0, 0, 1}}};
        const ParamTail conic{{{0, 1}, {0, 0, 1}}};
        const ParamTail line_tangent{{{0, 1}, {0}}};
        const ParamTail line_transverse{{{0}, {0, 1}}};

        {
            const auto v = is_smoothable(one_tail, {{"T", cusp}});
            if (!v.smoothable || !certificate_sound(v, tangent_rows({cusp}))) return false;
        }
        {
            const auto v = is_smoothable(one_tail, {{"T", immersed}});
            if (v.smoothable || !certificate_sound(v, tangent_rows({immersed}))) return false;
        }
        {
            const auto v = is_smoothable(two_tail, {{"A", conic}, {"B", line_tangent}});
            if (!v.smoothable || !certificate_sound(v, tangent_rows({conic, line_tangent})))
                return false;
        }
        {
            const auto v = is_smoothable(two_tail, {{"A", conic}, {"B", line_transverse}});
            if (v.smoothable || !certificate_sound(v, tangent_rows({conic, line_transverse})))
                return false;
        }

        // any three tails in the plane
        std::mt19937 rng(20240901);
        const auto plane = three_tail(2);
        for (int i = 0; i < 250; ++i) {
            std::map<std::string, ParamTail> tails;
            std::vector<ParamTail> flat;
            for (const auto* name : {"L1", "L2", "L3"}) {
                Poly x = {0, Rational(testgen::pick(rng, -6, 6))};
                Poly y = {0, Rational(testgen::pick(rng, -6, 6))};
                if (x[1] == 0 && y[1] == 0) x.push_back(1);
                ParamTail tail{{x, y}};
                tails.emplace(name, tail);
                flat.push_back(tail);
            }
            const auto v = is_smoothable(plane, tails);
            if (!v.smoothable || !certificate_sound(v, tangent_rows(flat))) return false;
        }

        // coplanarity in space
        const auto space = three_tail(3);
        const ParamTail e1{{{0, 1}, {0}, {0}}};
        const ParamTail e2{{{0}, {0, 1}, {0}}};
        const ParamTail diag{{{0, 1}, {0, 1}, {0}}};
        const ParamTail e3{{{0}, {0}, {0, 1}}};
        {
            const auto v = is_smoothable(space, {{"L1", e1}, {"L2", e2}, {"L3", diag}});
            if (!v.smoothable || !certificate_sound(v, tangent_rows({e1, e2, diag})))
                return false;
        }
        {
            const auto v = is_smoothable(space, {{"L1", e1}, {"L2", e2}, {"L3", e3}});
            if (v.smoothable || !certificate_sound(v, tangent_rows({e1, e2, e3})))
                return false;
        }
        return true;
    });

    all &= criterion(5, "oracle equivalence over n <= 3, d <= 6, k <= 3", [&] {
        for (int n = 1; n <= 3; ++n) {
            for (std::int64_t d = 1; d <= 6; ++d) {
                for (int k = 0; k <= 3; ++k) {
                    const ModuliContext ctx{n, d, k};
                    auto grouped = oracles::strata_by_tail_count(ctx);
                    for (int m = 1; m <= static_cast<int>(d) + k + 1; ++m) {
                        auto got = enumerate_strata(ctx, m);
                        auto expected =
                            grouped.count(m) ? grouped[m] : std::vector<StratumIndex>{};
                        std::sort(expected.begin(), expected.end(), stratum_less);
                        if (got != expected) return false;
                        for (const auto& idx : got) {
                            if (stratum_dimension(idx, ctx) !=
                                oracles::recipe_dimension(idx, ctx)) {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        return true;
    });

    all &= criterion(6, "property suites, >= 1000 generated cases each", [&] {
        // (a) lattice closure under meet and join
        {
            std::mt19937 rng(20240902);
            for (int i = 0; i < 1000; ++i) {
                const auto g = testgen::random_valid_graph(rng);
                const auto branches = enumerate_branches(g);
                for (std::size_t a = 0; a < branches.size(); ++a) {
                    for (std::size_t b = a; b < branches.size(); ++b) {
                        if (!is_admissible_subcurve(g, meet(branches[a], branches[b])) ||
                            !is_admissible_subcurve(g, join(branches[a], branches[b]))) {
                            return false;
                        }
                    }
                }
            }
        }
        // (b) strict tail-count monotonicity along inclusions
        {
            std::mt19937 rng(20240903);
            for (int i = 0; i < 1000; ++i) {
                const auto g = testgen::random_valid_graph(rng);
                const auto branches = enumerate_branches(g);
                for (const auto& inner : branches) {
                    for (const auto& outer : branches) {
                        if (inner == outer || !inner.subset_of(outer)) continue;
                        if (tail_count(g, inner) >= tail_count(g, outer)) return false;
                    }
                }
            }
        }
        // (c) separation stage below the pair's tail counts (strict for
        // incomparable branches; nested pairs sit exactly at the smaller count)
        {
            std::mt19937 rng(20240904);
            for (int i = 0; i < 1000; ++i) {
                const auto g = testgen::random_valid_graph(rng);
                const auto branches = enumerate_branches(g);
                for (std::size_t a = 0; a < branches.size(); ++a) {
                    for (std::size_t b = a + 1; b < branches.size(); ++b) {
                        const auto stage = separation_stage(g, branches[a], branches[b]);
                        const auto bound = std::min(tail_count(g, branches[a]),
                                                    tail_count(g, branches[b]));
                        const bool nested = branches[a].subset_of(branches[b]) ||
                                            branches[b].subset_of(branches[a]);
                        if (nested ? stage != bound : stage >= bound) return false;
                    }
                }
            }
        }
        // (d) rank invariance under scaling, permutation, span-append
        {
            std::mt19937 rng(20240905);
            for (int i = 0; i < 1000; ++i) {
                auto a = testgen::random_matrix(rng);
                const auto base = exact_rank(a);

                auto scaled = a;
                for (auto& row : scaled) {
                    const auto factor = testgen::random_nonzero_rational(rng);
                    for (auto& x : row) x *= factor;
                }
                if (exact_rank(scaled) != base) return false;

                auto shuffled = a;
                std::shuffle(shuffled.begin(), shuffled.end(), rng);
                if (exact_rank(shuffled) != base) return false;

                RatVector combo(a[0].size(), 0);
                for (const auto& row : a) {
                    const Rational coeff(testgen::pick(rng, -3, 3));
                    for (std::size_t j = 0; j < row.size(); ++j) combo[j] += coeff * row[j];
                }
                a.push_back(std::move(combo));
                if (exact_rank(a) != base) return false;
            }
        }
        // (e) generically_in_main implies not dimension_obstructed, exhaustively
        {
            long cases = 0;
            for (int n = 1; n <= 5; ++n) {
                for (std::int64_t d = 1; d <= 8; ++d) {
                    for (int k = 0; k <= 4; ++k) {
                        const ModuliContext ctx{n, d, k};
                        for (int m = 1; m <= static_cast<int>(d) + k; ++m) {
                            for (const auto& idx : enumerate_strata(ctx, m)) {
                                ++cases;
                                if (generically_in_main(idx, ctx) &&
                                    dimension_obstructed(idx, ctx)) {
                                    return false;
                                }
                            }
                        }
                    }
                }
            }
            if (cases < 1000) return false;
        }
        return true;
    });

    all &= criterion(7, "CLI determinism: byte-identical across two runs on the corpus", [&] {
        // expected exit code pinned per command so a broken binary cannot
        // pass by failing identically twice
        const std::vector<std::pair<std::string, int>> commands = {
            {" strata --n 2 --d 3 --k 0", 0},
            {" strata --n 2 --d 3 --k 0 --format json", 0},
            {" strata --n 3 --d 2 --k 2 --m 3 --format json", 0},
            {" strata --n 1 --d 4 --k 1", 0},
            {" strata --n 2 --d 3 --k 0 --m 5", 0},
            {" schedule --n 2 --d 3 --k 0", 0},
            {" schedule --n 2 --d 3 --k 0 --format json", 0},
            {" schedule --n 2 --d 3 --k 0 --variant main --format json", 0},
            {" schedule --n 1 --d 1 --k 0 --format json", 0},
            {" branches " + data + "/four_tails.json", 0},
            {" branches " + data + "/four_tails.json --format json", 0},
            {" branches " + data + "/four_tails.json --format dot", 0},
            {" branches " + data + "/one_tail.json --format json", 0},
            {" branches " + data + "/marked_tail.json --format json", 0},
            {" branches " + data + "/smooth_elliptic.json --format json", 0},
            {" branches " + data + "/invalid_unstable.json", 3},
            {" smoothable " + data + "/cusp_config.json", 0},
            {" smoothable " + data + "/cusp_config.json --format json", 0},
            {" smoothable " + data + "/immersed_config.json --format json", 0},
            {" smoothable " + data + "/tangent_config.json --format json", 0},
            {" smoothable " + data + "/transverse_config.json --format json", 0},
            {" smoothable " + data + "/coplanar_config.json --format json", 0},
            {" smoothable " + data + "/frame_config.json --format json", 0},
            {" smoothable " + data + "/case_i_config.json --format json", 0},
            {" smoothable " + data + "/rational_tangent_config.json --format json", 0},
            {" report", 0},
            {" report --format json", 0},
        };
        for (const auto& [cmd, expected_code] : commands) {
            const auto first = clitest::run(cli + cmd + " 2>&1");
            const auto second = clitest::run(cli + cmd + " 2>&1");
            if (first.code != expected_code) {
                std::cerr << "exit " << first.code << ", wanted " << expected_code << ":"
                          << cmd << "\n";
                return false;
            }
            if (first.output != second.output || first.code != second.code) {
                std::cerr << "nondeterministic:" << cmd << "\n";
                return false;
            }
        }
        return true;
    });

    return all ? 0 : 1;
}
