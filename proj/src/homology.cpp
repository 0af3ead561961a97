#include "exl/homology.hpp"

#include "exl/error.hpp"

#include <cstdlib>

namespace exl {

std::string to_string(ComplexKind kind) {
    switch (kind) {
    case ComplexKind::hochschild: return "hh";
    case ComplexKind::cyclic: return "hc";
    case ComplexKind::bar: return "bar";
    }
    return {};
}

std::string to_string(ChainSpace space) {
    switch (space) {
    case ChainSpace::ambient: return "A";
    case ChainSpace::ideal: return "I";
    case ChainSpace::relative: return "relative";
    }
    return {};
}

ComplexKind parse_complex_kind(const std::string& text) {
    if (text == "hh") return ComplexKind::hochschild;
    if (text == "hc") return ComplexKind::cyclic;
    if (text == "bar") return ComplexKind::bar;
    throw Error("unknown complex variant \"" + text + "\" (expected hh, hc or bar)");
}

ChainSpace parse_chain_space(const std::string& text) {
    if (text == "A") return ChainSpace::ambient;
    if (text == "I") return ChainSpace::ideal;
    if (text == "relative") return ChainSpace::relative;
    throw Error("unknown chain space \"" + text + "\" (expected A, I or relative)");
}

int configured_max_degree() {
    if (const char* env = std::getenv("EXCISIONLAB_MAX_DEGREE")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 0 && v < 64)
            return static_cast<int>(v);
    }
    return 4;
}

ChainBasis::ChainBasis(const SplitBasis& split, ComplexKind kind, ChainSpace space, int degree)
    : kind_(kind), space_(space), degree_(degree) {
    if (degree < 0)
        throw Error("negative chain degree");
    const std::size_t k = split.ideal_count();
    alphabet_ = space == ChainSpace::ideal ? k : split.dimension();
    const std::size_t m = static_cast<std::size_t>(degree) + 1;
    if (alphabet_ == 0)
        return;

    TensorIndex t(m, 0);
    while (true) {
        bool keep = true;
        if (space == ChainSpace::relative) {
            keep = false;
            for (auto i : t)
                keep = keep || i < k;
        }
        if (keep && kind == ComplexKind::cyclic) {
            auto rot = canonical_rotation(t);
            keep = !rot.vanishes && rot.slots == t;
        }
        if (keep) {
            index_.emplace(key(t), tuples_.size());
            tuples_.push_back(t);
        }
        std::size_t i = m;
        while (i > 0) {
            --i;
            if (++t[i] < alphabet_)
                break;
            t[i] = 0;
        }
        if (i == 0 && t[0] == 0)
            break;
    }
}

std::uint64_t ChainBasis::key(const TensorIndex& t) const {
    std::uint64_t k = 0;
    for (auto i : t)
        k = k * alphabet_ + i;
    return k;
}

std::optional<std::size_t> ChainBasis::index_of(const TensorIndex& t) const {
    if (t.size() != static_cast<std::size_t>(degree_) + 1)
        return std::nullopt;
    for (auto i : t)
        if (i >= alphabet_)
            return std::nullopt;
    auto it = index_.find(key(t));
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

SparseVector ChainBasis::coordinates(const Chain& c) const {
    SparseVector out(size());
    if (c.is_zero())
        return out;
    if (c.degree() != degree_)
        throw Error("chain degree " + std::to_string(c.degree()) + " does not match basis degree " +
                    std::to_string(degree_));
    const Chain source = kind_ == ComplexKind::cyclic ? canonicalize_cyclic(c).chain() : c;
    for (const auto& [t, coeff] : source.terms()) {
        auto i = index_of(t);
        if (!i)
            throw Error("chain has a term outside the " + to_string(kind_) + "/" + to_string(space_) +
                        " chain group");
        out.add(*i, coeff);
    }
    return out;
}

Chain ChainBasis::chain(const SparseVector& coords) const {
    if (coords.dimension() != size())
        throw Error("coordinate vector does not match chain basis size");
    Chain c(degree_);
    for (const auto& [i, v] : coords.entries())
        c.add(tuples_[i], v);
    return c;
}

SparseMatrix boundary_matrix(const SplitBasis& split, const ChainBasis& source, const ChainBasis& target) {
    if (source.kind() != target.kind() || source.space() != target.space() ||
        target.degree() + 1 != source.degree())
        throw Error("boundary_matrix: incompatible chain bases");
    const auto& a = split.adapted();
    std::vector<SparseVector> columns;
    columns.reserve(source.size());
    for (std::size_t j = 0; j < source.size(); ++j) {
        auto pure = Chain::pure(source.tuple(j));
        auto image = source.kind() == ComplexKind::bar ? bar_boundary(a, pure) : boundary_b(a, pure);
        columns.push_back(target.coordinates(image));
    }
    return SparseMatrix::from_columns(target.size(), columns);
}

HomologyReport homology(const SplitBasis& split, ComplexKind kind, ChainSpace space, int degree,
                        const HomologyOptions& options) {
    if (degree < 0)
        throw Error("negative homology degree");
    if (degree > options.max_degree)
        throw ResourceLimit("degree " + std::to_string(degree) + " exceeds the configured maximum " +
                            std::to_string(options.max_degree) +
                            " (the chain group has dim^(n+1) generators; raise EXCISIONLAB_MAX_DEGREE)");

    HomologyReport report{kind, space, degree, 0, 0, 0, {}};
    ChainBasis here(split, kind, space, degree);
    ChainBasis above(split, kind, space, degree + 1);

    std::vector<SparseVector> cycles;
    if (degree == 0) {
        for (std::size_t i = 0; i < here.size(); ++i)
            cycles.push_back(SparseVector::unit(here.size(), i));
    } else {
        ChainBasis below(split, kind, space, degree - 1);
        cycles = kernel_basis(boundary_matrix(split, here, below));
    }
    report.cycle_dimension = cycles.size();

    EchelonBasis span(here.size());
    auto up = boundary_matrix(split, above, here);
    for (const auto& col : up.columns())
        span.insert(col);
    report.boundary_rank = span.rank();

    for (auto& z : cycles)
        if (span.insert(z))
            report.representative_cycles.push_back(here.chain(z));
    report.dimension = report.representative_cycles.size();
    if (report.dimension + report.boundary_rank != report.cycle_dimension)
        throw Error("internal error: boundaries are not contained in the cycles");
    return report;
}

} // namespace exl
