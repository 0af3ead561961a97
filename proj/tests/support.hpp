#ifndef EXL_TESTS_SUPPORT_HPP
#define EXL_TESTS_SUPPORT_HPP

#include "exl/certificate.hpp"
#include "exl/demo.hpp"
#include "oracle/dense_oracle.hpp"

#include <random>
#include <string>
#include <vector>

namespace testing_support {

using namespace exl;

inline SplitBasis demo_split(const std::string& name) { return make_split_basis(demo_extension(name).ideal); }

inline oracle::Extension to_oracle(const DemoExtension& d) {
    const std::size_t dim = d.algebra.dimension();
    oracle::Extension ext;
    ext.table.assign(dim, std::vector<std::vector<oracle::Q>>(dim, std::vector<oracle::Q>(dim)));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            for (const auto& [k, c] : d.algebra.product(i, j).entries())
                ext.table[i][j][k] = c;
    ext.ideal.assign(dim, false);
    for (const auto& v : d.ideal.basis_vectors) {
        if (v.entries().size() != 1 || v.entries()[0].second != 1)
            throw Error("oracle needs an ideal spanned by standard basis vectors");
        ext.ideal[v.entries()[0].first] = true;
    }
    return ext;
}

inline Scalar random_scalar(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-5, 5), den(1, 3);
    int p = 0;
    while (p == 0)
        p = num(rng);
    Scalar s(p, den(rng));
    s.canonicalize();
    return s;
}

// Random chain of degree n. `ideal_prefix` forces that many leading slots
// into I; `relative` additionally forces at least one ideal slot.
inline Chain random_chain(std::mt19937& rng, const SplitBasis& split, int n, int terms, int ideal_prefix = 0,
                          bool relative = false, bool ideal_only = false) {
    const auto dim = static_cast<int>(split.dimension());
    const auto ic = static_cast<int>(split.ideal_count());
    std::uniform_int_distribution<int> any(0, dim - 1), in_ideal(0, std::max(ic - 1, 0));
    Chain c(n);
    for (int k = 0; k < terms; ++k) {
        TensorIndex t(static_cast<std::size_t>(n) + 1);
        for (int s = 0; s <= n; ++s)
            t[s] = static_cast<std::uint32_t>(ideal_only || s < ideal_prefix ? in_ideal(rng) : any(rng));
        if (relative && ic > 0 && std::none_of(t.begin(), t.end(), [&](auto i) { return split.is_ideal_index(i); }))
            t[std::uniform_int_distribution<int>(0, n)(rng)] = static_cast<std::uint32_t>(in_ideal(rng));
        c.add(t, random_scalar(rng));
    }
    return c;
}

// Spanning set of ker(b) on F_p C_n(A,I) (pure tensors whose first n-p+1
// slots lie in I), n >= 1.
inline std::vector<Chain> filtered_cycles(const SplitBasis& split, int n, int p) {
    ChainBasis source(split, ComplexKind::hochschild, ChainSpace::relative, n);
    ChainBasis target(split, ComplexKind::hochschild, ChainSpace::relative, n - 1);
    std::vector<Chain> keep;
    std::vector<SparseVector> columns;
    for (std::size_t j = 0; j < source.size(); ++j) {
        Chain pure = Chain::pure(source.tuple(j));
        if (filtration_level(split, pure) > p)
            continue;
        columns.push_back(target.coordinates(boundary_b(split.adapted(), pure)));
        keep.push_back(pure);
    }
    std::vector<Chain> out;
    if (keep.empty())
        return out;
    for (const auto& v : kernel_basis(SparseMatrix::from_columns(target.size(), columns))) {
        Chain c(n);
        for (const auto& [j, coeff] : v.entries())
            c += coeff * keep[j];
        out.push_back(c);
    }
    return out;
}

inline std::vector<CyclicChain> as_classes(const std::vector<Chain>& reps) {
    std::vector<CyclicChain> out;
    for (const auto& c : reps)
        out.push_back(canonicalize_cyclic(c));
    return out;
}

} // namespace testing_support

#endif
