#include "cyclo/circulant.hpp"

#include "cyclo/cyclotomic.hpp"
#include "cyclo/decompose.hpp"

namespace cyclo {

Circulant::Circulant(std::vector<Rational> first_row) : first_row_(std::move(first_row)) {
    if (first_row_.empty()) throw DomainError("a circulant needs at least one entry");
    for (auto& a : first_row_) a.canonicalize();
}

RatMatrix to_matrix(const Circulant& c) {
    const std::size_t n = c.size();
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = c.first_row()[(j + n - i) % n];
    return m;
}

Rational circ_det_bareiss(const Circulant& c) {
    return bareiss_det(to_matrix(c));
}

Rational circ_det_resultant(const Circulant& c) {
    const RatPoly f = c.associated_poly();
    if (f.is_zero()) return 0;
    Rational det = 1;
    for (auto d : divisors(c.size())) det *= resultant(cyclotomic(d), f);
    return det;
}

Rational circ_det(const Circulant& c) {
    Rational by_elimination = circ_det_bareiss(c);
    if (by_elimination != circ_det_resultant(c))
        throw std::logic_error("circulant determinant routes disagree");
    return by_elimination;
}

Singularity is_singular(const Circulant& c) {
    const RatPoly f = c.associated_poly();
    Singularity out;
    for (auto d : divisors(c.size()))
        if (divides(cyclotomic(d), f)) out.witnesses.push_back(d);
    out.singular = !out.witnesses.empty();
    return out;
}

AnnihilatorSystem annihilator_system(const PeriodicSeq& seq) {
    const std::size_t n = seq.period();
    RatMatrix m(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) m(j, k) = seq.values()[(j + k) % n];

    AnnihilatorSystem out{m, nullspace(m)};
    for (const auto& a : out.basis) {
        if (!apply(RatPoly(a), seq).is_zero())
            throw std::logic_error("nullspace vector does not annihilate the sequence");
    }
    return out;
}

bool annihilator_consistency(const PeriodicSeq& seq) {
    const std::size_t n = seq.period();
    const std::size_t nullity = annihilator_system(seq).basis.size();
    const auto supp = support(decompose(seq));

    std::uint64_t cyclic_dim = 0;
    for (auto d : supp) cyclic_dim += euler_phi(d);
    const bool full_support = supp.size() == divisors(n).size();
    return (nullity != 0) == !full_support && nullity == n - cyclic_dim;
}

}  // namespace cyclo
