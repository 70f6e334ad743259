#ifndef DLAB_SRC_CHECKS_HPP
#define DLAB_SRC_CHECKS_HPP

#include "dlab/verifier.hpp"

namespace dlab::detail {

struct Outcome {
    Status status = Status::kPass;
    Witness witness;
};

inline Outcome pass() { return {}; }
inline Outcome fail(Witness w) { return {Status::kFail, std::move(w)}; }
inline Outcome skipped(Witness w) { return {Status::kSkipped, std::move(w)}; }

Outcome run_identity_claim(ClaimId claim, const Params& params);
Outcome run_q_claim(ClaimId claim, const Params& params);
Outcome run_congruence_claim(ClaimId claim, const Params& params);

} // namespace dlab::detail

#endif // DLAB_SRC_CHECKS_HPP
