#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "r3v/enumerate.hpp"

namespace r3v {

enum class ClaimStatus { Confirmed, Refuted, Untestable, Canonicalized };

std::string to_string(ClaimStatus s);

struct ClaimInfo {
  std::string_view id;
  std::string_view scope;   // gray, enumerators, cyclic, fsd, examples
  std::string_view anchor;  // the claim as stated
};

inline constexpr std::array<ClaimInfo, 26> kClaims{{
    {"sec2.cardinality", "gray", "|C| = |C1||C2||C3|"},
    {"sec2.decomposition", "gray", "C = vC1 + (1-v)C2 + (1-v^2)C3; R is a principal ideal ring with three non-trivial ideals"},
    {"sec3.lee_table", "gray", "Lee weight case table of a0 + a1 v + a2 v^2"},
    {"thm2", "gray", "Psi is weight preserving from (R^n, Lee) to (F_q^3n, Hamming)"},
    {"thm3", "gray", "if C is self-orthogonal, so is Psi(C)"},
    {"cor4", "gray", "minimum Lee weight of C equals minimum Hamming weight of Psi(C)"},
    {"lem5.dimension", "gray", "Psi(C) has dimension k1 + k2 + k3"},
    {"lem5.distance", "gray", "Psi(C) has minimum distance min{d(C1), d(C2), d(C3)}"},
    {"thm6", "gray", "Psi(C)^perp = Psi(C^perp); C self-dual implies Psi(C) self-dual"},
    {"thm7.1", "enumerators", "Lee_C(X,Y) = cwe_C(X^3, X^2Y, XY^2, Y^3)"},
    {"thm7.2", "enumerators", "Ham(X,Y) = cwe_C(X,Y,Y,Y)"},
    {"thm7.3", "enumerators", "Lee_C(X,Y) = w_Psi(C)(X,Y)"},
    {"thm7.4", "enumerators", "Lee_C^perp(X,Y) = 1/|C| Lee_C(X+Y, X-Y)"},
    {"thm8", "cyclic", "C is cyclic iff C1, C2, C3 are cyclic"},
    {"cor9", "cyclic", "C^perp is cyclic and C^perp = vC1^perp + (1-v)C2^perp + (1-v^2)C3^perp"},
    {"cor10", "cyclic", "a self-dual cyclic code of length n exists iff q is a power of 2 and n is even"},
    {"thm11", "cyclic", "|C| = q^(3n - (deg f1 + deg f2 + deg f3))"},
    {"thm12", "fsd", "[I_n | A] with A^T = A generates an isodual, hence formally self-dual, code"},
    {"ex13", "examples", "[I_5 | A], q = 3: Gray image is a [30,15,9]_3 formally self-dual code"},
    {"thm14", "fsd", "[I_n | M] with M circulant generates an isodual code"},
    {"ex15", "examples", "[I_5 | M], q = 5: Gray image is a [30,15,12]_5 formally self-dual code"},
    {"thm16", "fsd", "[I_n | bordered circulant] generates a formally self-dual code"},
    {"ex17", "examples", "bordered circulant, q = 3, n = 4: Gray image is a [24,12,9]_3 formally self-dual code"},
    {"thm18", "fsd", "the Gray image of a formally self-dual code is formally self-dual"},
    {"lem19", "fsd", "the direct product of formally self-dual codes is formally self-dual"},
    {"thm20", "fsd", "linear odd formally self-dual codes exist for all lengths"},
}};

inline constexpr std::array<std::string_view, 6> kScopes{"all", "gray", "enumerators", "cyclic", "fsd", "examples"};

struct VerificationOptions {
  std::string scope = "all";
  u64 seed = 42;
  u64 budget = kDefaultBudget;
  bool timings = false;  // adds runtime_ms, which makes reports run-dependent
};

struct ClaimResult {
  std::string id;
  std::string anchor;
  std::string scope;
  ClaimStatus status = ClaimStatus::Untestable;
  nlohmann::json observed;
  nlohmann::json expected;
  std::string note;
  bool consistent = true;  // internal cross-checks agreed
  double runtime_ms = 0;
};

struct VerificationReport {
  VerificationOptions options;
  std::vector<ClaimResult> entries;
  bool complete = false;  // every catalog claim in scope is present exactly once

  bool consistent() const;
  nlohmann::json to_json() const;
  std::string to_text() const;
};

/// Throws InvalidParams for an unknown scope.
VerificationReport run_verification_suite(const VerificationOptions& options);

}  // namespace r3v
