#ifndef EXL_CERTIFICATE_HPP
#define EXL_CERTIFICATE_HPP

#include "exl/excision.hpp"

#include <optional>

namespace exl {

struct Mismatch {
    std::string reason;
    Chain residual; ///< nonzero when the failure is a chain identity
};

struct Verdict {
    std::optional<Mismatch> mismatch;
    bool ok() const noexcept { return !mismatch; }
};

// The verifiers recompute every identity from the structure constants with
// their own boundary expansion and rotation normal form; they do not call
// into the producers (boundary_b, canonicalize_cyclic, ChainBasis).

Verdict verify_certificate(const SplitBasis& split, const BoundaryCertificate& cert);
Verdict verify_certificate(const SplitBasis& split, const DescentCertificate& cert);
Verdict verify_certificate(const SplitBasis& split, const InverseResult& result);

} // namespace exl

#endif
