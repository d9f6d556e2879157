/*
   Copyright 2026 The mdcc Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Acceptance suite: one PASS/FAIL line per criterion, with the measured runtime
// against its limit. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

#include "support/random.hpp"

using namespace mdcc;
using mdcc::testing::M;
using mdcc::testing::Rng;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

// every resolution computed in the run, for the syzygy bound
std::vector<std::pair<std::size_t, int>> g_lengths;

ResolutionReport resolve(const CodePresentation& c) {
    auto rep = minimal_resolution(c);
    g_lengths.push_back({rep.complex.length(), c.ring().n()});
    return rep;
}

int run(int id, const char* name, double limit_s, const std::function<Outcome()>& body) {
    auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = limit_s <= 0 || secs < limit_s;
    bool pass = out.ok && in_time;
    std::printf("%s  [%d] %-34s %8.3f s", pass ? "PASS" : "FAIL", id, name, secs);
    if (limit_s > 0) std::printf(" (limit %g s)", limit_s);
    if (!in_time) std::printf(" too slow;");
    if (!out.detail.empty()) std::printf("  %s", out.detail.c_str());
    std::printf("\n");
    std::fflush(stdout);
    return pass ? 0 : 1;
}

const FieldSpec F2(2), F101(101);

CodePresentation koszul_code() { return CodePresentation(M(Ring::S(F2, 2), {{"D1", "D2"}})); }

std::vector<CodePresentation> random_codes(std::uint64_t seed, std::size_t count, const mdcc::testing::CodeSpec& spec = {}) {
    Rng rng(seed);
    std::vector<CodePresentation> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(mdcc::testing::random_code(rng, spec));
    return out;
}

// the minimal resolution direct-summed with a trivial piece: the first generator is repeated
PolyComplex with_redundant_generator(const PolyComplex& g) {
    const Ring& S = g.ring();
    auto mats = g.matrices();
    auto& g1 = mats[0];
    auto cols1 = g1.columns();
    cols1.push_back(g1.column(0));
    PolyMatrix new_g1 = PolyMatrix::from_columns(S, g1.rows(), cols1);

    const std::size_t p1 = g1.cols();
    std::vector<ModElem> cols2;
    if (mats.size() > 1)
        for (const auto& c : mats[1].columns()) {
            auto comps = c.components();
            comps.push_back(Poly(S));
            cols2.emplace_back(S, std::move(comps));
        }
    ModElem trivial(S, p1 + 1);
    trivial[0] = Poly::constant(S, 1);
    trivial[p1] = Poly::constant(S, -1);
    cols2.push_back(trivial);
    std::vector<PolyMatrix> out{new_g1, PolyMatrix::from_columns(S, p1 + 1, cols2)};
    for (std::size_t k = 2; k < mats.size(); ++k) {
        auto rows = mats[k].rows();
        PolyMatrix m(S, rows + (k == 2 ? 1 : 0), mats[k].cols());
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < mats[k].cols(); ++j) m(i, j) = mats[k](i, j);
        out.push_back(m);
    }
    return validate_complex(std::move(out));
}

std::string str(const TwistFunction& t) {
    std::ostringstream s;
    s << "(";
    for (std::size_t i = 0; i < t.size(); ++i) s << (i ? "," : "") << t[i];
    s << ")";
    return s.str();
}

}  // namespace

int main() {
    int failures = 0;

    failures += run(1, "worked 3x2 example over F_101", 0.1, [] {
        Ring S = Ring::S(F101, 1);
        auto g = validate_complex(
            {M(S, {{"2*D1^3 + D1 + 1", "D1^2 - 10"}, {"D1^2 - 5", "D1 + 4"}, {"3*D1^4 + 7*D1", "D1^2 + 1"}})});
        auto table = column_degree_table(g);
        auto lead = leading_term_complex(g);
        bool ok = table.length() == 1 && table[0].values() == std::vector<int>{4, 2} &&
                  lead.G(1) == M(S, {{"0", "D1^2"}, {"0", "0"}, {"3*D1^4", "D1^2"}});
        return Outcome{ok, "a_1 = " + str(table[0])};
    });

    failures += run(2, "Koszul end to end", 1.0, [] {
        auto rep = resolve(koszul_code());
        auto inv = rate_and_dimension(rep);
        auto forney = forney_table(rep);
        bool ok = inv.homological_dimension == 2 && rep.complex.sizes() == std::vector<std::size_t>{1, 2, 1} &&
                  forney.levels.size() == 2 && forney.levels[0].values() == std::vector<int>{1, 1} &&
                  forney.levels[1].values() == std::vector<int>{2} && inv.memory == 1 && rep.is_resolution &&
                  rep.is_reduced && rep.is_pd && rep.is_minimal;
        return Outcome{ok, "l = 2, sizes (1;2,1), Forney ((1,1),(2)), memory 1"};
    });

    failures += run(3, "Hilbert formula = oracle", 60.0, [] {
        Outcome out;
        std::vector<std::size_t> kv = oracle::hilbert_oracle_range(koszul_code(), 4);
        auto kt = resolve(koszul_code()).degree_table;
        std::vector<std::size_t> expect{0, 2, 5, 9, 14};
        for (int d = 0; d <= 4; ++d) out.ok = out.ok && kv[d] == expect[d] && hilbert_formula(kt, 2, d) == expect[d];
        auto codes = random_codes(303, 12);
        std::size_t checked = 0, longer = 0;
        for (const auto& c : codes) {
            auto rep = resolve(c);
            longer += rep.complex.length() > 1;
            auto values = oracle::hilbert_oracle_range(c, 6);
            for (int d = 0; d <= 6; ++d, ++checked)
                if (hilbert_formula(rep.degree_table, c.ring().n(), d) != values[d]) out.ok = false;
        }
        out.detail = "Koszul [0,2,5,9,14]; " + std::to_string(codes.size()) + " random codes, " +
                     std::to_string(checked) + " values, " + std::to_string(longer) + " codes with l >= 2";
        return out;
    });

    failures += run(4, "truncated exactness <=> PD", 300.0, [] {
        Rng rng(404);
        std::size_t pd = 0, mismatches = 0, pd_not_resolution = 0;
        for (int i = 0; i < 200; ++i) {
            auto g = mdcc::testing::random_complex(rng);
            bool is_pd = check_pd(g);
            bool exact = true;
            for (int d = 0; d <= 6 && exact; ++d) exact = oracle::truncated_exactness(g, d);
            pd += is_pd;
            mismatches += exact != is_pd;
            pd_not_resolution += is_pd && !check_resolution(g);
        }
        return Outcome{mismatches == 0 && pd_not_resolution == 0, "200 complexes (" + std::to_string(pd) + " PD), " +
                                                          std::to_string(mismatches) + " disagreements, " +
                                                          std::to_string(pd_not_resolution) + " PD non-resolutions"};
    });

    failures += run(5, "invariants under re-presentation", 120.0, [] {
        Rng rng(505);
        auto codes = random_codes(505, 20);
        std::size_t bad = 0;
        for (const auto& c : codes) {
            auto a = resolve(c);
            auto b = resolve(mdcc::testing::re_present(c, rng));
            auto ia = rate_and_dimension(a), ib = rate_and_dimension(b);
            bool same = a.complex.sizes() == b.complex.sizes() && forney_table(a) == forney_table(b) &&
                        ia.memory == ib.memory && ia.rate == ib.rate &&
                        ia.homological_dimension == ib.homological_dimension;
            bad += !same;
        }
        return Outcome{bad == 0, "20 codes, " + std::to_string(bad) + " differences"};
    });

    failures += run(6, "minimality (scalar entries)", 10.0, [] {
        Outcome out;
        std::size_t caught = 0, total = 0;
        auto codes = random_codes(606, 10);
        codes.push_back(koszul_code());
        for (const auto& c : codes) {
            auto rep = resolve(c);
            out.ok = out.ok && rep.is_minimal && check_minimal(rep.complex);
            auto redundant = with_redundant_generator(rep.complex);
            ++total;
            if (check_pd(redundant) && minimality_defect(redundant).has_value()) ++caught;
        }
        Ring S = Ring::S(F101, 2);
        auto g1 = M(S, {{"D1", "D2", "D1"}});
        auto g = validate_complex({g1, syzygy_basis(g1)});
        auto w = minimality_defect(g);
        out.ok = out.ok && caught == total && w.has_value() && w->level == 2;
        out.detail = std::to_string(total) + " minimal resolutions pass; " + std::to_string(caught) + "/" +
                     std::to_string(total) + " injected redundancies caught";
        if (w) out.detail += "; [D1,D2,D1] witness G_2(" + std::to_string(w->row) + "," + std::to_string(w->col) + ")";
        return out;
    });

    failures += run(7, "memory recovery", 60.0, [] {
        auto codes = random_codes(707, 10);
        codes.insert(codes.begin(), koszul_code());
        std::size_t bad = 0;
        for (const auto& c : codes) {
            int m = memory(resolve(c));
            bool with_m = oracle::memory_recovery_check(c, m, m + 3);
            bool with_less = oracle::memory_recovery_check(c, m - 1, m + 3);
            bad += !with_m || with_less;
        }
        return Outcome{bad == 0, std::to_string(codes.size()) + " codes, " + std::to_string(bad) + " failures"};
    });

    failures += run(8, "observability", 120.0, [] {
        Outcome out;
        Ring S = Ring::S(F2, 2);
        auto ideal = is_observable(koszul_code());
        out.ok = !ideal.observable && ideal.witness.has_value() &&
                 !membership(*ideal.witness, SubmodulePresentation(koszul_code().generators()));
        CodePresentation free_code(M(S, {{"D1"}, {"D2"}}));
        auto fr = is_observable(free_code);
        out.ok = out.ok && fr.observable &&
                 module_equal(SubmodulePresentation(free_code.generators()),
                              SubmodulePresentation(syzygy_basis(*fr.parity_check)));
        Rng rng(808);
        std::size_t agree = 0, observable = 0;
        for (int i = 0; i < 20; ++i) {
            auto c = mdcc::testing::random_code(rng, {{2, 3, 5}, 1, 3, 2, 2});
            if (i % 3 == 0) {
                auto factor = Poly::variable(c.ring(), 1) + mdcc::testing::random_poly(c.ring(), 0, rng);
                c = CodePresentation(c.generators().map([&](const Poly& f) { return factor * f; }));
            }
            auto bound = static_cast<std::size_t>(oracle::max_generator_degree(c) + 1);
            bool obs = is_observable(c).observable;
            observable += obs;
            agree += obs == prop3_spot_check(resolve(c).complex, bound);
        }
        out.ok = out.ok && agree == 20;
        out.detail = "examples ok; " + std::to_string(agree) + "/20 univariate agree (" + std::to_string(observable) +
                     " observable)";
        return out;
    });

    failures += run(9, "syzygy bound 1 <= l <= n", 0, [] {
        std::size_t bad = 0;
        for (auto [l, n] : g_lengths) bad += l < 1 || l > static_cast<std::size_t>(n);
        return Outcome{bad == 0 && !g_lengths.empty(),
                       std::to_string(g_lengths.size()) + " resolutions, " + std::to_string(bad) + " violations"};
    });

    std::printf("%s: %d of 9 criteria failed\n", failures ? "FAILED" : "OK", failures);
    return failures ? 1 : 0;
}
