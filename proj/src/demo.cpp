#include "exl/demo.hpp"

#include "exl/error.hpp"
#include "exl/linear.hpp"
#include "exl/local_units.hpp"

#include <variant>

namespace exl {

namespace {

using Matrix = std::vector<std::vector<Scalar>>;

Matrix matmul(const Matrix& x, const Matrix& y) {
    const auto n = x.size();
    Matrix out(n, std::vector<Scalar>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            if (x[i][k] != 0)
                for (std::size_t j = 0; j < n; ++j)
                    out[i][j] += x[i][k] * y[k][j];
    return out;
}

SparseVector flatten(const Matrix& m) {
    std::vector<Scalar> flat;
    for (const auto& row : m)
        flat.insert(flat.end(), row.begin(), row.end());
    return SparseVector::from_dense(flat);
}

Matrix unit_matrix(std::size_t size, std::size_t r, std::size_t c) {
    Matrix m(size, std::vector<Scalar>(size));
    m[r][c] = 1;
    return m;
}

Element coords(std::size_t dim, std::initializer_list<std::size_t> ones) {
    Element v(dim);
    for (auto i : ones)
        v.set(i, 1);
    return v;
}

void check_hypotheses(const DemoExtension& d) {
    if (validate_algebra(d.algebra))
        throw Error("demo " + d.name + ": algebra is not associative");
    if (auto bad = validate_ideal(d.ideal))
        throw Error("demo " + d.name + ": " + bad->describe());
    auto split = make_split_basis(d.ideal);
    std::vector<Element> ideal_basis;
    for (std::size_t i = 0; i < split.ideal_count(); ++i)
        ideal_basis.push_back(split.adapted().basis_element(i));
    if (std::holds_alternative<NoLocalUnit>(find_local_left_unit(split, ideal_basis)))
        throw Error("demo " + d.name + ": the ideal has no left unit for its basis");

    std::vector<Element> all;
    for (std::size_t i = 0; i < d.algebra.dimension(); ++i)
        all.push_back(d.algebra.basis_element(i));
    auto whole = make_split_basis(Ideal{d.algebra, all});
    if (std::holds_alternative<NoLocalUnit>(find_local_left_unit(whole, all)))
        throw Error("demo " + d.name + ": the algebra has no left unit for its basis");
}

std::vector<DemoExtension> build_corpus() {
    std::vector<DemoExtension> corpus;

    {
        auto a = algebra_from_matrices({"E11", "E12", "E22"},
                                       {unit_matrix(2, 0, 0), unit_matrix(2, 0, 1), unit_matrix(2, 1, 1)});
        corpus.push_back({"t2-corner", a, Ideal{a, {coords(3, {0}), coords(3, {1})}},
                          "Upper-triangular 2x2 matrices with I = span{E11, E12} (first row). "
                          "E11 is a left unit of I but I has no right unit (E12 E11 = 0)."});
    }
    {
        auto a = algebra_from_matrices(
            {"E11", "E12", "E21", "E22"},
            {unit_matrix(2, 0, 0), unit_matrix(2, 0, 1), unit_matrix(2, 1, 0), unit_matrix(2, 1, 1)});
        corpus.push_back({"matrix2", a,
                          Ideal{a, {coords(4, {0}), coords(4, {1}), coords(4, {2}), coords(4, {3})}},
                          "Full 2x2 matrices with I = A. Unital, A/I = 0, so the relative theory "
                          "coincides with the absolute one."});
    }
    {
        auto a = algebra_from_matrices({"E11", "E12", "E21", "E22", "u"},
                                       {unit_matrix(3, 0, 0), unit_matrix(3, 0, 1), unit_matrix(3, 1, 0),
                                        unit_matrix(3, 1, 1), unit_matrix(3, 2, 2)});
        corpus.push_back({"direct-sum", a,
                          Ideal{a, {coords(5, {0}), coords(5, {1}), coords(5, {2}), coords(5, {3})}},
                          "M2(Q) + Q as block-diagonal 3x3 matrices with I = M2(Q). The identity "
                          "of M2 is a left unit of I."});
    }
    for (const auto& d : corpus)
        check_hypotheses(d);
    return corpus;
}

} // namespace

Algebra algebra_from_matrices(std::vector<std::string> labels,
                              const std::vector<std::vector<std::vector<Scalar>>>& matrices) {
    if (labels.size() != matrices.size())
        throw Error("algebra_from_matrices: one label per matrix");
    std::vector<SparseVector> flat;
    for (const auto& m : matrices) {
        if (m.size() != matrices.front().size())
            throw Error("algebra_from_matrices: matrices of different sizes");
        flat.push_back(flatten(m));
    }
    const auto entries = flat.empty() ? 0 : flat.front().dimension();
    auto basis = SparseMatrix::from_columns(entries, flat);

    Algebra a(std::move(labels));
    for (std::size_t i = 0; i < matrices.size(); ++i)
        for (std::size_t j = 0; j < matrices.size(); ++j) {
            auto x = solve(basis, flatten(matmul(matrices[i], matrices[j])));
            if (std::holds_alternative<Unsolvable>(x))
                throw Error("algebra_from_matrices: span is not closed under multiplication");
            a.set_product(i, j, std::get<SparseVector>(x));
        }
    return a;
}

const std::vector<DemoExtension>& demo_corpus() {
    static const std::vector<DemoExtension> corpus = build_corpus();
    return corpus;
}

const DemoExtension& demo_extension(const std::string& name) {
    for (const auto& d : demo_corpus())
        if (d.name == name)
            return d;
    throw Error("unknown demo \"" + name + "\" (expected t2-corner, matrix2 or direct-sum)");
}

} // namespace exl
