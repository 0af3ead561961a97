#ifndef EXL_HOMOLOGY_HPP
#define EXL_HOMOLOGY_HPP

#include "exl/chain.hpp"
#include "exl/linear.hpp"

#include <string>
#include <unordered_map>

namespace exl {

enum class ComplexKind { hochschild, cyclic, bar };
enum class ChainSpace { ambient, ideal, relative };

std::string to_string(ComplexKind kind);
std::string to_string(ChainSpace space);
ComplexKind parse_complex_kind(const std::string& text); ///< "hh" | "hc" | "bar"
ChainSpace parse_chain_space(const std::string& text);   ///< "A" | "I" | "relative"

/// The degree cap: EXCISIONLAB_MAX_DEGREE if set, otherwise 4.
int configured_max_degree();

/// Ordered basis of one chain group: full tuples for Hochschild and bar,
/// canonical non-vanishing rotations for cyclic. `ambient` uses all of A,
/// `ideal` only ideal indices, `relative` tuples with at least one ideal slot.
class ChainBasis {
public:
    ChainBasis(const SplitBasis& split, ComplexKind kind, ChainSpace space, int degree);

    ComplexKind kind() const noexcept { return kind_; }
    ChainSpace space() const noexcept { return space_; }
    int degree() const noexcept { return degree_; }
    std::size_t size() const noexcept { return tuples_.size(); }
    const TensorIndex& tuple(std::size_t i) const { return tuples_.at(i); }
    std::optional<std::size_t> index_of(const TensorIndex& t) const;

    /// Coordinates of c in this basis; cyclic bases canonicalize first.
    /// Throws exl::Error when c has a term outside the space.
    SparseVector coordinates(const Chain& c) const;
    Chain chain(const SparseVector& coords) const;

private:
    std::uint64_t key(const TensorIndex& t) const;

    ComplexKind kind_;
    ChainSpace space_;
    int degree_;
    std::size_t alphabet_;
    std::vector<TensorIndex> tuples_;
    std::unordered_map<std::uint64_t, std::size_t> index_;
};

/// Matrix of the differential from `source` (degree n) to `target`
/// (degree n-1); both must share kind and space. b for hochschild/cyclic,
/// b' for bar.
SparseMatrix boundary_matrix(const SplitBasis& split, const ChainBasis& source, const ChainBasis& target);

struct HomologyReport {
    ComplexKind kind;
    ChainSpace space;
    int degree = 0;
    std::size_t dimension = 0;
    std::size_t cycle_dimension = 0; ///< dim ker d_n
    std::size_t boundary_rank = 0;   ///< rank d_{n+1}
    std::vector<Chain> representative_cycles;
};

struct HomologyOptions {
    int max_degree = configured_max_degree();
};

/// H_n of the requested complex. Representatives are the rref kernel basis
/// vectors of d_n that are independent modulo im d_{n+1}, kept in order.
HomologyReport homology(const SplitBasis& split, ComplexKind kind, ChainSpace space, int degree,
                        const HomologyOptions& options = {});

} // namespace exl

#endif
