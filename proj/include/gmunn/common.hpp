#ifndef GMUNN_COMMON_HPP_
#define GMUNN_COMMON_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gmunn {

/// Dense element id. Valid ids are 0..n-1; kNone marks "undefined" in
/// partial maps stored as total arrays.
using Id = int32_t;
inline constexpr Id kNone = -1;

enum class Errc {
  // core-algebra
  not_associative,
  not_regular,
  idempotents_do_not_commute,
  non_unique_inverse,
  not_a_semilattice,
  // presheaf / actions
  sa1_violation,
  sa2_violation,
  sa3_violation,
  restriction_not_functorial,
  not_idempotent_separating,
  lattice_mismatch,
  not_functorial,
  kernel_not_abelian,
  not_section,
  not_homomorphism,
  not_surjective_hom,
  // munn
  closure_violation,
  hom_precondition_failed,
  // topology
  missing_empty_or_full,
  not_closed_under_union,
  not_closed_under_intersection,
  not_surjective,
  not_local_homeo,
  not_continuous,
  not_sober,
  not_global,
  // generic
  size_cap_exceeded,
  parse_error,
};

const char* errc_name(Errc c);

/// All validation and enumeration failures are reported through this type;
/// `witness()` carries the element ids that exhibit the violation.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail, std::vector<Id> witness = {});
  Errc code() const { return code_; }
  const std::vector<Id>& witness() const { return witness_; }

 private:
  Errc code_;
  std::vector<Id> witness_;
};

[[noreturn]] void fail(Errc code, const std::string& detail,
                       std::vector<Id> witness = {});

/// Execution policy for the data-parallel kernels. Exec::serial is the
/// reference implementation; Exec::parallel uses OpenMP when available.
enum class Exec { serial, parallel };

// Process-wide configuration. Set once at startup (CLI flags / env);
// library structures themselves stay immutable.
int max_size();                       // cap for exhaustive enumerations (default 64)
void set_max_size(int n);
int max_congruence_size();            // cap for congruence-lattice enumeration (default 16)
void set_max_congruence_size(int n);
Exec default_exec();                  // default Exec::parallel
void set_default_exec(Exec e);

/// Throws size_cap_exceeded when n exceeds the given cap.
void check_cap(int n, int cap, const std::string& what);

}  // namespace gmunn

#endif  // GMUNN_COMMON_HPP_
