// Copyright 2026 The schurscope Authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <string>
#include <vector>

#include "schurscope/parallel.hpp"
#include "schurscope/permgroup.hpp"

namespace schurscope {

// Ramification type: branch-cycle orders, kept sorted ascending.
using RamType = std::vector<std::uint64_t>;

RamType make_type(std::vector<std::uint64_t> e);
std::string type_str(const RamType& t);  // "(2,3,7)"

// n minus the number of cycles.
std::uint64_t ind(const Perm& sigma);

// g with sum ind(sigma_i) = 2(n - 1 + g). The tuple must have product 1
// and generate a transitive group.
std::uint64_t permutation_genus(const std::vector<Perm>& sigmas);

// g with 2(|G| - 1 + g) = |G| sum (1 - 1/e_i).
std::uint64_t regular_genus(const RamType& type, const BigInt& group_order);

enum class TypeClass { SubEuclidean, Euclidean, Hyperbolic };
struct TypeClassification {
  TypeClass cls = TypeClass::Hyperbolic;
  std::string spherical_case;  // "(n,n)", "(2,2,k)", "(2,3,3)", "(2,3,4)", "(2,3,5)" when sub-Euclidean
};
TypeClassification classify_type(const RamType& type);
std::string type_class_name(TypeClass c);

struct GenusSystem {
  std::vector<Perm> elements;
  RamType type;
  std::vector<std::uint64_t> indices;
  std::uint64_t genus = 0;
  std::uint64_t regular_genus = 0;
};

inline constexpr std::uint64_t kGenus0OrderCap = 200000;

struct Genus0Result {
  std::vector<GenusSystem> systems;  // one witness per type, sorted by type
  std::size_t class_count = 0;       // conjugacy classes of G
  std::size_t candidates = 0;        // class multisets meeting the index budget
  std::vector<RamType> types() const;
};

// All ramification types of genus-0 generating systems with at most r_max
// branch points.
Genus0Result genus0_search(const PermGroup& G, std::size_t r_max = 5, Backend backend = Backend::Parallel,
                           std::uint64_t order_cap = kGenus0OrderCap);

}  // namespace schurscope
