#include "gmunn/common.hpp"

#include <atomic>
#include <sstream>

namespace gmunn {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::not_associative: return "NotAssociative";
    case Errc::not_regular: return "NotRegular";
    case Errc::idempotents_do_not_commute: return "IdempotentsDoNotCommute";
    case Errc::non_unique_inverse: return "NonUniqueInverse";
    case Errc::not_a_semilattice: return "NotASemilattice";
    case Errc::sa1_violation: return "SA1Violation";
    case Errc::sa2_violation: return "SA2Violation";
    case Errc::sa3_violation: return "SA3Violation";
    case Errc::restriction_not_functorial: return "RestrictionNotFunctorial";
    case Errc::not_idempotent_separating: return "NotIdempotentSeparating";
    case Errc::lattice_mismatch: return "LatticeMismatch";
    case Errc::not_functorial: return "NotFunctorial";
    case Errc::kernel_not_abelian: return "KernelNotAbelian";
    case Errc::not_section: return "NotSection";
    case Errc::not_homomorphism: return "NotHomomorphism";
    case Errc::not_surjective_hom: return "NotSurjectiveHom";
    case Errc::closure_violation: return "ClosureViolation";
    case Errc::hom_precondition_failed: return "HomPreconditionFailed";
    case Errc::missing_empty_or_full: return "MissingEmptyOrFull";
    case Errc::not_closed_under_union: return "NotClosedUnderUnion";
    case Errc::not_closed_under_intersection: return "NotClosedUnderIntersection";
    case Errc::not_surjective: return "NotSurjective";
    case Errc::not_local_homeo: return "NotLocalHomeo";
    case Errc::not_continuous: return "NotContinuous";
    case Errc::not_sober: return "NotSober";
    case Errc::not_global: return "NotGlobal";
    case Errc::size_cap_exceeded: return "SizeCapExceeded";
    case Errc::parse_error: return "ParseError";
  }
  return "UnknownError";
}

namespace {
std::string format_message(Errc code, const std::string& detail,
                           const std::vector<Id>& witness) {
  std::ostringstream os;
  os << errc_name(code);
  if (!detail.empty()) os << ": " << detail;
  if (!witness.empty()) {
    os << " (witness";
    for (Id w : witness) os << ' ' << w;
    os << ')';
  }
  return os.str();
}
}  // namespace

Error::Error(Errc code, const std::string& detail, std::vector<Id> witness)
    : std::runtime_error(format_message(code, detail, witness)),
      code_(code),
      witness_(std::move(witness)) {}

void fail(Errc code, const std::string& detail, std::vector<Id> witness) {
  throw Error(code, detail, std::move(witness));
}

namespace {
std::atomic<int> g_max_size{64};
std::atomic<int> g_max_congruence_size{16};
std::atomic<Exec> g_exec{Exec::parallel};
}  // namespace

int max_size() { return g_max_size.load(); }
void set_max_size(int n) { g_max_size.store(n); }
int max_congruence_size() { return g_max_congruence_size.load(); }
void set_max_congruence_size(int n) { g_max_congruence_size.store(n); }
Exec default_exec() { return g_exec.load(); }
void set_default_exec(Exec e) { g_exec.store(e); }

void check_cap(int n, int cap, const std::string& what) {
  if (n > cap) {
    fail(Errc::size_cap_exceeded,
         what + " has size " + std::to_string(n) + ", cap is " +
             std::to_string(cap));
  }
}

}  // namespace gmunn
