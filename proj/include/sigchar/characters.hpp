#pragma once

#include <cstdint>
#include <vector>

#include "sigchar/partition.hpp"

namespace sigchar {

// Irreducible character of S_n labeled lambda, evaluated at cycle type mu,
// by the Murnaghan-Nakayama rule.  Memoized; safe for concurrent readers.
// Requires lambda.n() == mu.n() <= 14.
std::int64_t character(const Partition& lambda, const Partition& mu);

// Kostka number: semistandard Young tableaux of shape lambda, content mu.
// Nonzero iff dominance_leq(mu, lambda).  Requires lambda.n() == mu.n() <= 20.
std::int64_t kostka(const Partition& lambda, const Partition& mu);

// Vector (K_{d^t, e})_d over partitions(n) in canonical order: the W-type
// multiplicities of a standard module whose nilpotent has Jordan type e.
std::vector<std::int64_t> kostka_column(const Partition& e);

}  // namespace sigchar
