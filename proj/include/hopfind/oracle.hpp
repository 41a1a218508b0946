#ifndef HOPFIND_ORACLE_HPP
#define HOPFIND_ORACLE_HPP

// Slow reference implementations for cross-checking. None of these share a
// code path with the structure views or convolution routines.

#include <cstdint>
#include <vector>

#include "hopfind/constructors.hpp"

namespace hopfind {

inline constexpr std::int64_t kBruteforceSweedlerCap = 8;
inline constexpr std::uint64_t kRadicalEnumerationCap = 1u << 16;
inline constexpr std::uint64_t kGrouplikeEnumerationCap = 1u << 20;

// h_(1) h_(2) ... h_(m), with S applied to every leg when m < 0.
Vector sweedler_bruteforce(const HopfAlgebraData& h, std::span<const Residue> v, std::int64_t m);

// {x : the two-sided ideal generated by x is nilpotent}, by enumerating every
// element of the algebra.
Subspace radical_enumeration(const PrimeField& field, const Tensor3& mult);
Subspace radical_enumeration(const HopfAlgebraData& h);

struct GrouplikeSet {
  std::vector<Vector> elements;  // sorted lexicographically
  GroupTable table;
};
GrouplikeSet grouplike_enumeration(const HopfAlgebraData& h);

// #{g in G : g^n = 1} mod p.
Residue group_indicator_count(const GroupTable& g, std::int64_t n, std::uint64_t p);

}  // namespace hopfind

#endif
