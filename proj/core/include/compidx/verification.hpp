#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "compidx/check.hpp"
#include "compidx/cyclic_sums.hpp"
#include "compidx/discrete_systems.hpp"

namespace compidx {

// Seeded generators for battery instances.  Chain frames are drawn from
// random symplectic products so degenerate blocks occur naturally; with
// `force_degenerate` some frames are replaced by coordinate frames or
// repeats to guarantee rank-deficient Wronskians in the mix.
FrameChain random_chain(int n, int m, std::uint64_t seed,
                        bool force_degenerate = false);

// Identity batteries for one instance.  Every check is an exact integer
// equality between independently computed routes.  `seed` drives the
// auxiliary transforms (triangular factors, right scalings) some laws need.
std::vector<IdentityCheck> pair_identity_checks(const LagrangianFrame& Y,
                                                const LagrangianFrame& Yhat,
                                                const SymplecticMatrix& W,
                                                std::uint64_t seed,
                                                const ToleranceProfile& tol = {});
std::vector<IdentityCheck> chain_inertia_checks(const FrameChain& chain,
                                                const ToleranceProfile& tol = {});
std::vector<IdentityCheck> chain_law_checks(const FrameChain& chain,
                                            std::uint64_t seed,
                                            const ToleranceProfile& tol = {});
std::vector<IdentityCheck> chain_bound_checks(const FrameChain& chain,
                                              const ToleranceProfile& tol = {});
std::vector<IdentityCheck> chain_geometry_checks(const FrameChain& chain,
                                                 const ToleranceProfile& tol = {});
std::vector<IdentityCheck> system_identity_checks(const SymplecticSystem& system,
                                                  std::uint64_t seed,
                                                  const ToleranceProfile& tol = {});

struct BatteryOptions {
  int trials = 100;        // chain/pair instances
  int system_trials = 25;  // discrete-system instances
  int n_max = 3;
  int m_max = 6;
  std::uint64_t seed = 12345;
  ToleranceProfile tol;
};

struct BatteryFailure {
  std::string category;
  std::uint64_t seed = 0;  // reproduces the failing instance
  IdentityCheck check;
};

struct BatteryReport {
  long long identities_checked = 0;
  std::vector<BatteryFailure> failures;

  bool ok() const { return failures.empty(); }
};

// Runs pair/chain/kashiwara/system batteries over seeded random instances.
BatteryReport run_identity_battery(const BatteryOptions& options);

}  // namespace compidx
