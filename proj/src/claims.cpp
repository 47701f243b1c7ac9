#include "kecs/claims.hpp"

namespace kecs {

std::vector<std::string> claim_ids() { return {}; }

std::vector<ClaimResult> run_claims(const ClaimOptions&) { return {}; }

}  // namespace kecs
