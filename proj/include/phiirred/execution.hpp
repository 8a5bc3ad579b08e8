#pragma once

namespace phiirred {

/// Kernels that fan out over independent work items (per-k certificate
/// steps, per-prime sieve passes, lemma scans) take this tag. The serial path
/// is the reference; both paths must produce identical results.
enum class Execution { serial, parallel };

/// Number of OpenMP threads available, 1 when built without OpenMP.
int max_threads();

}  // namespace phiirred
