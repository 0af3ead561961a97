#ifndef EXL_DEMO_HPP
#define EXL_DEMO_HPP

#include "exl/algebra.hpp"

#include <string>
#include <vector>

namespace exl {

/// A built-in extension I -> A -> A/I whose ideal has local left units.
struct DemoExtension {
    std::string name;
    Algebra algebra;
    Ideal ideal;
    std::string documentation;
};

/// Subalgebra of square rational matrices spanned by `matrices`, with
/// structure constants obtained by multiplying and re-expanding.
Algebra algebra_from_matrices(std::vector<std::string> labels,
                              const std::vector<std::vector<std::vector<Scalar>>>& matrices);

/// t2-corner, matrix2, direct-sum. Each entry is checked on construction:
/// associativity, two-sidedness, and local left units for I and A.
const std::vector<DemoExtension>& demo_corpus();
const DemoExtension& demo_extension(const std::string& name);

} // namespace exl

#endif
