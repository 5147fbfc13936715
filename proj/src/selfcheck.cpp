#include "cyclo/selfcheck.hpp"

#include "cyclo/circulant.hpp"
#include "cyclo/cyclotomic.hpp"
#include "cyclo/decompose.hpp"
#include "cyclo/diffeq.hpp"
#include "cyclo/io.hpp"
#include "cyclo/random.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

namespace cyclo {

namespace {

constexpr double kOracleTolerance = 1e-9;

std::string show(const PeriodicSeq& s) { return "(" + sequence_to_csv(s) + ")"; }
std::string show(const RatPoly& p) { return "[" + format_poly(p) + "]"; }

std::string show(const std::vector<Rational>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + format_rational(v[i]);
    return out + ")";
}

/// Tracks one suite; stops at the first failing case.
class Runner {
public:
    explicit Runner(std::string name) { result_.name = std::move(name); }

    bool failed() const { return result_.failure.has_value(); }

    /// Counts a case. `input` describes it and is only rendered on failure.
    bool expect(bool ok, const std::function<std::string()>& input) {
        ++result_.cases;
        if (!ok) result_.failure = input();
        return ok;
    }

    SuiteResult finish() { return std::move(result_); }

    void fail_with(std::string message) { result_.failure = std::move(message); }

private:
    SuiteResult result_;
};

using SuiteBody = std::function<void(Runner&)>;

SuiteResult run_suite(const std::string& name, const SuiteBody& body) {
    Runner r(name);
    try {
        body(r);
    } catch (const std::exception& e) {
        r.fail_with(std::string("exception: ") + e.what());
    }
    return r.finish();
}

Rational cofactor_det(const RatMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m(0, 0);
    Rational det = 0;
    for (std::size_t col = 0; col < n; ++col) {
        if (m(0, col) == 0) continue;
        RatMatrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t c = 0, mc = 0; c < n; ++c)
                if (c != col) minor(r - 1, mc++) = m(r, c);
        Rational term = m(0, col) * cofactor_det(minor);
        det += (col % 2 == 0) ? term : Rational(-term);
    }
    return det;
}

class Checker {
public:
    explicit Checker(const SelfcheckOptions& o) : opt_(o), gen_(o.seed) {}

    std::vector<SuiteResult> run() {
        const std::vector<std::pair<std::string, SuiteBody>> suites = {
            {"exactmath.divmod_reconstruction", [this](Runner& r) { divmod_reconstruction(r); }},
            {"exactmath.xgcd_identity", [this](Runner& r) { xgcd_identity(r); }},
            {"exactmath.gcd_divides_and_monic", [this](Runner& r) { gcd_divides(r); }},
            {"exactmath.bareiss_vs_cofactor", [this](Runner& r) { bareiss_vs_cofactor(r); }},
            {"exactmath.nullspace_basis", [this](Runner& r) { nullspace_basis(r); }},
            {"cyclotomic.table_shape", [this](Runner& r) { table_shape(r); }},
            {"cyclotomic.unity_product", [this](Runner& r) { unity_product(r); }},
            {"cyclotomic.mobius_oracle", [this](Runner& r) { mobius_oracle(r); }},
            {"cyclotomic.totient_sum", [this](Runner& r) { totient_sum(r); }},
            {"cyclotomic.recognition_round_trip", [this](Runner& r) { recognition(r); }},
            {"cyclotomic.factor_reconstruction", [this](Runner& r) { factor_reconstruction(r); }},
            {"periodic.shift_composition", [this](Runner& r) { shift_composition(r); }},
            {"periodic.apply_homomorphism", [this](Runner& r) { apply_homomorphism(r); }},
            {"periodic.unity_annihilates", [this](Runner& r) { unity_annihilates(r); }},
            {"periodic.halving_split", [this](Runner& r) { halving(r); }},
            {"periodic.oracle_sum", [this](Runner& r) { oracle_sum(r); }},
            {"decompose.projector_algebra", [this](Runner& r) { projector_algebra(r); }},
            {"decompose.round_trip", [this](Runner& r) { round_trip(r); }},
            {"decompose.period_is_lcm_of_support", [this](Runner& r) { period_lcm(r); }},
            {"decompose.oracle_agreement", [this](Runner& r) { oracle_agreement(r); }},
            {"decompose.antiperiodic_components", [this](Runner& r) { antiperiodic(r); }},
            {"decompose.kernel_dimensions", [this](Runner& r) { kernel_dimensions(r); }},
            {"diffeq.synth_solution", [this](Runner& r) { synth(r); }},
            {"diffeq.factor_recovery", [this](Runner& r) { factor_recovery(r); }},
            {"diffeq.sample_span_annihilated", [this](Runner& r) { span_annihilated(r); }},
            {"diffeq.unity_factor_set", [this](Runner& r) { unity_factor_set(r); }},
            {"diffeq.reverse_involution", [this](Runner& r) { reverse_involution(r); }},
            {"circulant.det_two_routes", [this](Runner& r) { det_two_routes(r); }},
            {"circulant.unital_singularity", [this](Runner& r) { unital(r); }},
            {"circulant.annihilator_vectors", [this](Runner& r) { annihilator_vectors(r); }},
            {"circulant.dimension_identity", [this](Runner& r) { dimension_identity(r); }},
            {"cli.text_round_trip", [this](Runner& r) { text_round_trip(r); }},
        };
        std::vector<SuiteResult> out;
        for (const auto& [name, body] : suites) out.push_back(run_suite(name, body));
        return out;
    }

private:
    std::uint64_t cap(std::uint64_t bound) const { return std::min(bound, opt_.max_n); }

    ProjectorSet projectors(std::uint64_t n) const {
        ProjectorSet set = *projectors_for(n);
        if (opt_.fault == InjectedFault::projector_sign) {
            auto& last = set.projectors.rbegin()->second.poly;
            last = -last;
        }
        return set;
    }

    // -- exactmath ----------------------------------------------------------

    void divmod_reconstruction(Runner& r) {
        for (int i = 0; i < 200; ++i) {
            RatPoly a = gen_.rat_poly(8);
            RatPoly b = gen_.int_poly(static_cast<std::size_t>(gen_.integer(0, 8)));
            auto [q, rem] = divmod(a, b);
            if (!r.expect(q * b + rem == a && rem.degree() < b.degree(),
                          [&] { return "a=" + show(a) + " b=" + show(b); }))
                return;
        }
    }

    void xgcd_identity(Runner& r) {
        for (int i = 0; i < 200; ++i) {
            RatPoly a = gen_.rat_poly(6), b = gen_.rat_poly(6);
            if (a.is_zero() && b.is_zero()) b = RatPoly::constant(1);
            Bezout bz = xgcd(a, b);
            if (!r.expect(bz.u * a + bz.v * b == bz.gcd && bz.gcd.is_monic(),
                          [&] { return "a=" + show(a) + " b=" + show(b); }))
                return;
        }
    }

    void gcd_divides(Runner& r) {
        for (int i = 0; i < 200; ++i) {
            // Plant a common factor so the gcd is usually nontrivial.
            RatPoly common = gen_.int_poly(static_cast<std::size_t>(gen_.integer(0, 3)));
            RatPoly a = common * gen_.int_poly(static_cast<std::size_t>(gen_.integer(0, 4)));
            RatPoly b = common * gen_.int_poly(static_cast<std::size_t>(gen_.integer(0, 4)));
            RatPoly g = gcd(a, b);
            bool ok = g.is_monic() && divides(g, a) && divides(g, b) && divides(common, g);
            if (!r.expect(ok, [&] { return "a=" + show(a) + " b=" + show(b); })) return;
        }
    }

    void bareiss_vs_cofactor(Runner& r) {
        for (int i = 0; i < 500; ++i) {
            RatMatrix m(3, 3, gen_.int_vector(9, -2, 2));
            if (!r.expect(bareiss_det(m) == cofactor_det(m), [&] { return "M=" + show(m.entries()); })) return;
        }
        for (std::size_t n = 1; n <= 5; ++n) {
            for (int i = 0; i < 40; ++i) {
                RatMatrix m(n, n, gen_.int_vector(n * n, -3, 3));
                if (!r.expect(bareiss_det(m) == cofactor_det(m), [&] { return "M=" + show(m.entries()); }))
                    return;
            }
        }
    }

    void nullspace_basis(Runner& r) {
        for (int i = 0; i < 200; ++i) {
            const auto rows = static_cast<std::size_t>(gen_.integer(1, 5));
            const auto cols = static_cast<std::size_t>(gen_.integer(1, 5));
            // Low-rank products make nontrivial nullspaces common.
            const auto inner = static_cast<std::size_t>(gen_.integer(1, 4));
            RatMatrix a(rows, inner, gen_.int_vector(rows * inner, -2, 2));
            RatMatrix b(inner, cols, gen_.int_vector(inner * cols, -2, 2));
            RatMatrix m(rows, cols);
            for (std::size_t i2 = 0; i2 < rows; ++i2)
                for (std::size_t j = 0; j < cols; ++j)
                    for (std::size_t k = 0; k < inner; ++k) m(i2, j) += a(i2, k) * b(k, j);
            auto basis = nullspace(m);
            bool ok = basis.size() == cols - rank(m);
            for (const auto& v : basis)
                for (const auto& x : m.multiply(v)) ok = ok && x == 0;
            if (!r.expect(ok, [&] { return "M(" + std::to_string(rows) + "x" + std::to_string(cols) + ")=" + show(m.entries()); }))
                return;
        }
    }

    // -- cyclotomic ---------------------------------------------------------

    void table_shape(Runner& r) {
        for (std::uint64_t n = 1; n <= opt_.max_n; ++n) {
            RatPoly p = cyclotomic(n);
            bool ok = p.is_monic() && p.has_integer_coeffs() && static_cast<std::uint64_t>(p.degree()) == euler_phi(n);
            if (!r.expect(ok, [&] { return "n=" + std::to_string(n); })) return;
        }
    }

    void unity_product(Runner& r) {
        for (std::uint64_t n = 1; n <= opt_.max_n; ++n) {
            RatPoly prod = RatPoly::constant(1);
            for (const auto& f : factor_unity(n)) prod = prod * f.phi;
            if (!r.expect(prod == RatPoly::unity_minus_one(n), [&] { return "n=" + std::to_string(n); })) return;
        }
    }

    void mobius_oracle(Runner& r) {
        for (std::uint64_t n = 1; n <= cap(64); ++n)
            if (!r.expect(cyclotomic(n) == cyclotomic_mobius_oracle(n), [&] { return "n=" + std::to_string(n); }))
                return;
    }

    void totient_sum(Runner& r) {
        for (std::uint64_t n = 1; n <= opt_.max_n; ++n) {
            std::uint64_t sum = 0;
            for (auto d : divisors(n)) sum += euler_phi(d);
            if (!r.expect(sum == n, [&] { return "n=" + std::to_string(n); })) return;
        }
    }

    void recognition(Runner& r) {
        for (std::uint64_t n = 1; n <= opt_.max_n; ++n)
            if (!r.expect(is_cyclotomic(cyclotomic(n)) == n, [&] { return "n=" + std::to_string(n); })) return;
    }

    void factor_reconstruction(Runner& r) {
        const auto top = static_cast<long>(std::max<std::uint64_t>(1, cap(20)));
        for (int i = 0; i < 200; ++i) {
            RatPoly p = gen_.int_poly(static_cast<std::size_t>(gen_.integer(0, 3)));
            const long count = gen_.integer(0, 3);
            for (long k = 0; k < count; ++k) p = p * cyclotomic(static_cast<std::uint64_t>(gen_.integer(1, top)));
            auto [factors, residual] = cyclotomic_factors(p);
            RatPoly rebuilt = residual;
            for (const auto& [d, mult] : factors)
                for (unsigned k = 0; k < mult; ++k) rebuilt = rebuilt * cyclotomic(d);
            bool ok = rebuilt == p && cyclotomic_factors(residual).factors.empty();
            if (!r.expect(ok, [&] { return "p=" + show(p); })) return;
        }
    }

    // -- periodic -----------------------------------------------------------

    void shift_composition(Runner& r) {
        for (std::uint64_t n = 1; n <= opt_.max_n; ++n) {
            for (int i = 0; i < 10; ++i) {
                PeriodicSeq s = gen_.sequence(n);
                const long span = 3 * static_cast<long>(n);
                long a = gen_.integer(-span, span), b = gen_.integer(-span, span);
                if (!r.expect(shift(shift(s, a), b) == shift(s, a + b),
                              [&] { return show(s) + " a=" + std::to_string(a) + " b=" + std::to_string(b); }))
                    return;
            }
        }
    }

    void apply_homomorphism(Runner& r) {
        for (std::uint64_t n = 1; n <= cap(12); ++n) {
            for (int i = 0; i < 10; ++i) {
                PeriodicSeq s = gen_.sequence(n);
                RatPoly p = gen_.rat_poly(4), q = gen_.rat_poly(4);
                bool ok = apply(p + q, s) == apply(p, s) + apply(q, s) && apply(p * q, s) == apply(p, apply(q, s));
                if (!r.expect(ok, [&] { return show(s) + " p=" + show(p) + " q=" + show(q); })) return;
            }
        }
    }

    void unity_annihilates(Runner& r) {
        for (std::uint64_t n = 1; n <= opt_.max_n; ++n) {
            PeriodicSeq s = gen_.sequence(n);
            if (!r.expect(apply(RatPoly::unity_minus_one(n), s).is_zero(), [&] { return show(s); })) return;
        }
    }

    void halving(Runner& r) {
        for (std::uint64_t n = 2; n <= opt_.max_n; n += 2) {
            for (int i = 0; i < 10; ++i) {
                PeriodicSeq s = gen_.sequence(n);
                auto [g, h] = halving_split(s);
                const auto half = static_cast<long long>(n / 2);
                bool ok = g + h == s && shift(g, half) == g && shift(h, half) == -h;
                if (!r.expect(ok, [&] { return show(s); })) return;
            }
        }
    }

    void oracle_sum(Runner& r) {
        for (std::uint64_t n = 1; n <= cap(64); ++n) {
            PeriodicSeq s = gen_.sequence(n);
            std::vector<std::complex<double>> total(n);
            for (const auto& [d, group] : dft_group_oracle(s))
                for (std::size_t k = 0; k < n; ++k) total[k] += group[k];
            double err = 0;
            for (std::size_t k = 0; k < n; ++k) err = std::max(err, std::abs(total[k] - s.values()[k].get_d()));
            if (!r.expect(err <= kOracleTolerance, [&] { return show(s); })) return;
        }
    }

    // -- decompose ----------------------------------------------------------

    void projector_algebra(Runner& r) {
        for (std::uint64_t n = 1; n <= cap(48); ++n)
            if (!r.expect(check_projectors(projectors(n)).ok(), [&] { return "n=" + std::to_string(n); })) return;
    }

    void round_trip(Runner& r) {
        for (std::uint64_t n = 1; n <= opt_.max_n; ++n) {
            const ProjectorSet set = projectors(n);
            for (int i = 0; i < 100; ++i) {
                PeriodicSeq s = gen_.sequence(n);
                Decomposition dec = decompose(s, set);
                bool ok = reconstruct(dec) == s;
                for (const auto& [d, c] : dec.components) {
                    ok = ok && apply(cyclotomic(d), c).is_zero();
                    ok = ok && (c.is_zero() || fundamental_period(c) == d);
                }
                if (!r.expect(ok, [&] { return show(s); })) return;
            }
        }
    }

    // Sequences assembled from known kernel elements: shifts of the Phi_d
    // recurrence solution span ker Phi_d(E).
    void period_lcm(Runner& r) {
        for (std::uint64_t n = 1; n <= opt_.max_n; ++n) {
            const ProjectorSet set = projectors(n);
            for (int i = 0; i < 20; ++i) {
                PeriodicSeq s = PeriodicSeq::zero(n);
                std::vector<std::uint64_t> chosen;
                for (auto d : divisors(n)) {
                    if (!gen_.coin()) continue;
                    const PeriodicSeq base = extend(synth_solution(d), n);
                    PeriodicSeq part = PeriodicSeq::zero(n);
                    for (std::uint64_t j = 0; j < euler_phi(d); ++j)
                        part = part + gen_.rational() * shift(base, static_cast<long long>(j));
                    if (part.is_zero()) continue;
                    chosen.push_back(d);
                    s = s + part;
                }
                const auto supp = support(decompose(s, set));
                bool ok = supp == chosen && fundamental_period(s) == lcm_of(supp);
                if (!r.expect(ok, [&] { return show(s); })) return;
            }
        }
    }

    void oracle_agreement(Runner& r) {
        for (std::uint64_t n = 1; n <= cap(64); ++n) {
            const ProjectorSet set = projectors(n);
            for (int i = 0; i < 20; ++i) {
                PeriodicSeq s = gen_.sequence(n);
                Decomposition dec = decompose(s, set);
                auto groups = dft_group_oracle(s);
                double err = 0;
                for (const auto& [d, c] : dec.components)
                    for (std::size_t k = 0; k < n; ++k)
                        err = std::max(err, std::abs(groups.at(d)[k] - c.values()[k].get_d()));
                if (!r.expect(err <= kOracleTolerance, [&] { return show(s); })) return;
            }
        }
    }

    void antiperiodic(Runner& r) {
        for (std::uint64_t n = 2; n <= opt_.max_n; n += 2) {
            const ProjectorSet set = projectors(n);
            for (int i = 0; i < 10; ++i) {
                PeriodicSeq s = gen_.sequence(n);
                Decomposition dec = decompose(s, set);
                bool ok = true;
                for (std::uint64_t d = 2; n % d == 0; d *= 2) {
                    const auto& c = dec.components.at(d);
                    ok = ok && (c.is_zero() || is_antiperiodic(c, d / 2));
                }
                if (!r.expect(ok, [&] { return show(s); })) return;
            }
        }
    }

    void kernel_dimensions(Runner& r) {
        for (std::uint64_t n = 1; n <= opt_.max_n; ++n) {
            std::vector<Rational> unit(n);
            unit[0] = 1;
            const PeriodicSeq delta(std::move(unit));
            std::uint64_t sum = 0;
            bool ok = true;
            for (auto d : divisors(n)) {
                sum += kernel_dimension(n, d);
                // ker Phi_d(E) on P_n is the image of pi_d, whose rank is phi(d).
                RatMatrix images(n, n);
                for (std::size_t j = 0; j < n; ++j) {
                    PeriodicSeq img = apply(projectors_for(n)->projectors.at(d), shift(delta, static_cast<long long>(j)));
                    for (std::size_t k = 0; k < n; ++k) images(j, k) = img.values()[k];
                }
                ok = ok && rank(images) == kernel_dimension(n, d);
            }
            if (!r.expect(ok && sum == n, [&] { return "n=" + std::to_string(n); })) return;
        }
    }

    // -- diffeq -------------------------------------------------------------

    void synth(Runner& r) {
        for (std::uint64_t d = 1; d <= cap(30); ++d) {
            PeriodicSeq s = synth_solution(d);
            bool ok = apply(cyclotomic(d), s).is_zero() && fundamental_period(s) == d;
            if (!r.expect(ok, [&] { return "d=" + std::to_string(d); })) return;
        }
    }

    RatPoly non_cyclotomic_factor() {
        while (true) {
            RatPoly f = gen_.int_poly(static_cast<std::size_t>(gen_.integer(1, 3)));
            if (f.coeffs().front() != 0 && cyclotomic_factors(f).factors.empty()) return f;
        }
    }

    std::vector<std::uint64_t> distinct_indices(std::uint64_t top, long max_count) {
        std::vector<std::uint64_t> pool(top);
        std::iota(pool.begin(), pool.end(), std::uint64_t{1});
        std::shuffle(pool.begin(), pool.end(), gen_.engine());
        pool.resize(static_cast<std::size_t>(std::min<long>(gen_.integer(1, max_count), static_cast<long>(top))));
        std::sort(pool.begin(), pool.end());
        return pool;
    }

    void factor_recovery(Runner& r) {
        const std::uint64_t top = std::max<std::uint64_t>(1, cap(20));
        for (int i = 0; i < 100; ++i) {
            auto ds = distinct_indices(top, 3);
            RatPoly residual = non_cyclotomic_factor();
            RatPoly p = residual;
            for (auto d : ds) p = p * cyclotomic(d);
            DiffEqReport rep = analyze(p);
            std::map<std::uint64_t, unsigned> expected;
            for (auto d : ds) expected[d] = 1;
            bool ok = rep.cyclotomic_factors == expected && rep.residual == residual && rep.has_integer_periodic;
            if (!r.expect(ok, [&] { return "p=" + show(p); })) return;
        }
    }

    void span_annihilated(Runner& r) {
        const std::uint64_t top = std::max<std::uint64_t>(1, cap(12));
        for (int i = 0; i < 50; ++i) {
            auto ds = distinct_indices(top, 3);
            RatPoly p = RatPoly::constant(gen_.integer(1, 3));
            for (auto d : ds) p = p * cyclotomic(d);
            DiffEqReport rep = analyze(p);
            if (!rep.is_cyclotomic_equation) {
                r.expect(false, [&] { return "not classified cyclotomic: p=" + show(p); });
                return;
            }
            const auto period = static_cast<std::size_t>(*rep.common_period);
            PeriodicSeq y = PeriodicSeq::zero(period);
            for (const auto& [d, sample] : rep.sample_solutions) {
                const PeriodicSeq base = extend(sample, period);
                for (std::uint64_t j = 0; j < euler_phi(d); ++j)
                    y = y + gen_.rational() * shift(base, static_cast<long long>(j));
            }
            bool ok = apply(p, y).is_zero() && period == lcm_of(ds);
            if (!r.expect(ok, [&] { return "p=" + show(p) + " y=" + show(y); })) return;
        }
    }

    void unity_factor_set(Runner& r) {
        for (std::uint64_t n = 1; n <= opt_.max_n; ++n) {
            DiffEqReport rep = analyze(RatPoly::unity_minus_one(n));
            std::vector<std::uint64_t> keys;
            for (const auto& [d, mult] : rep.cyclotomic_factors) keys.push_back(d);
            bool ok = keys == divisors(n) && rep.is_cyclotomic_equation && rep.common_period == n;
            if (!r.expect(ok, [&] { return "n=" + std::to_string(n); })) return;
        }
    }

    void reverse_involution(Runner& r) {
        for (int i = 0; i < 200; ++i) {
            RatPoly p = gen_.int_poly(static_cast<std::size_t>(gen_.integer(0, 8)));
            if (p.coeffs().front() == 0) continue;
            if (!r.expect(p.reversed().reversed() == p, [&] { return "p=" + show(p); })) return;
        }
    }

    // -- circulant ----------------------------------------------------------

    bool circulant_case(Runner& r, const std::vector<Rational>& row) {
        Circulant c(row);
        const Rational by_elim = circ_det_bareiss(c);
        const Rational by_res = circ_det_resultant(c);
        const Singularity sing = is_singular(c);
        const bool gcd_nontrivial = gcd(c.associated_poly(), RatPoly::unity_minus_one(row.size())).degree() >= 1;
        const bool ok = by_elim == by_res && sing.singular == (by_elim == 0) && sing.singular == gcd_nontrivial;
        return r.expect(ok, [&] { return "row=" + show(row); });
    }

    void det_two_routes(Runner& r) {
        for (std::size_t n = 1; n <= cap(3); ++n) {
            std::vector<Rational> row(n, Rational(-1));
            while (true) {
                if (!circulant_case(r, row)) return;
                std::size_t k = 0;
                while (k < n && row[k] == 1) row[k++] = -1;
                if (k == n) break;
                row[k] += 1;
            }
        }
        const auto top = static_cast<long>(std::max<std::uint64_t>(1, cap(8)));
        for (int i = 0; i < 1000; ++i) {
            auto n = static_cast<std::size_t>(gen_.integer(1, top));
            if (!circulant_case(r, gen_.int_vector(n, -2, 2))) return;
        }
    }

    void unital(Runner& r) {
        for (std::size_t n = 1; n <= cap(6); ++n) {
            for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
                std::vector<Rational> row(n);
                for (std::size_t k = 0; k < n; ++k) row[k] = (mask >> k) & 1;
                Circulant c(row);
                bool some_factor = false;
                for (auto d : divisors(n)) some_factor = some_factor || divides(cyclotomic(d), c.associated_poly());
                const bool singular = circ_det(c) == 0;
                if (!r.expect(singular == some_factor && singular == is_singular(c).singular,
                              [&] { return "row=" + show(row); }))
                    return;
            }
        }
    }

    void annihilator_vectors(Runner& r) {
        for (std::uint64_t n = 1; n <= cap(12); ++n) {
            for (int i = 0; i < 20; ++i) {
                PeriodicSeq s = random_structured(n);
                auto sys = annihilator_system(s);
                bool ok = true;
                for (const auto& a : sys.basis)
                    for (long long x = 0; x < static_cast<long long>(n); ++x) {
                        Rational acc = 0;
                        for (std::size_t k = 0; k < n; ++k) acc += a[k] * s.at(x + static_cast<long long>(k));
                        ok = ok && acc == 0;
                    }
                if (!r.expect(ok, [&] { return show(s); })) return;
            }
        }
    }

    void dimension_identity(Runner& r) {
        for (std::uint64_t n = 1; n <= cap(12); ++n) {
            std::vector<Rational> delta(n);
            delta[0] = 1;
            if (!r.expect(annihilator_consistency(PeriodicSeq(delta)) &&
                              annihilator_system(PeriodicSeq(delta)).basis.empty(),
                          [&] { return "delta n=" + std::to_string(n); }))
                return;
            for (int i = 0; i < 200; ++i) {
                PeriodicSeq s = random_structured(n);
                if (!r.expect(annihilator_consistency(s), [&] { return show(s); })) return;
            }
        }
    }

    /// Fully random sequences almost always have full support; half the time
    /// zero out a random subset of components to exercise nontrivial nullspaces.
    PeriodicSeq random_structured(std::uint64_t n) {
        PeriodicSeq s = gen_.sequence(n);
        if (gen_.coin()) return s;
        Decomposition dec = decompose(s);
        for (auto& [d, c] : dec.components)
            if (gen_.coin()) c = PeriodicSeq::zero(n);
        return reconstruct(dec);
    }

    // -- cli ----------------------------------------------------------------

    void text_round_trip(Runner& r) {
        for (int i = 0; i < 200; ++i) {
            Rational q(gen_.integer(-1000000, 1000000), gen_.integer(1, 1000));
            q.canonicalize();
            const std::string text = format_rational(q);
            if (!r.expect(parse_rational(text) == q && format_rational(parse_rational(text)) == text,
                          [&] { return text; }))
                return;
        }
        for (std::uint64_t n = 1; n <= opt_.max_n; ++n) {
            PeriodicSeq s = gen_.sequence(n);
            const std::string dumped = sequence_to_json(s).dump();
            bool ok = parse_sequence(dumped) == s && sequence_to_json(parse_sequence(dumped)).dump() == dumped &&
                      parse_sequence(sequence_to_csv(s)) == s;
            if (!r.expect(ok, [&] { return show(s); })) return;
        }
    }

    SelfcheckOptions opt_;
    InputGenerator gen_;
};

}  // namespace

std::vector<SuiteResult> run_selfcheck(const SelfcheckOptions& options) {
    if (options.max_n == 0) throw DomainError("selfcheck requires max_n >= 1");
    return Checker(options).run();
}

}  // namespace cyclo
