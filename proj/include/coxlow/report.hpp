#ifndef COXLOW_REPORT_HPP_
#define COXLOW_REPORT_HPP_

#include <optional>
#include <vector>

#include <json.hpp>

#include "coxlow/conjecture.hpp"
#include "coxlow/group.hpp"

namespace coxlow {

// Machine-readable outputs. Every document carries a versioned "schema"
// field such as "coxlow.verify/1"; arrays follow the library's stable
// orderings so documents are reproducible byte for byte.

nlohmann::ordered_json group_json(GroupSpec const& spec);

template <class T>
nlohmann::ordered_json small_roots_json(GroupSpec const& spec, SmallRootSet<T> const& sigma);

template <class T>
nlohmann::ordered_json low_elements_json(GroupSpec const& spec, SmallRootSet<T> const& sigma,
                                 LowEnumeration const& lows);

template <class T>
nlohmann::ordered_json automaton_json(GroupSpec const& spec, SmallRootSet<T> const& sigma,
                              Automaton const& aut);

nlohmann::ordered_json growth_json(GroupSpec const& spec, std::vector<BigInt> const& words,
                           std::optional<std::vector<std::uint64_t>> const& elements);

struct VerifyArtifacts {
  BijectionReport bijection;
  std::optional<GbipSummary> gbip;
  // Per-state result of the descent-peeling builder (rank 3 only).
  std::vector<std::optional<Element>> constructed;
  std::optional<PolytopeReport> polytopes;
};

template <class T>
nlohmann::ordered_json verify_json(GroupSpec const& spec, SmallRootSet<T> const& sigma,
                           Automaton const& aut, VerifyArtifacts const& artifacts);

}  // namespace coxlow

#endif  // COXLOW_REPORT_HPP_
