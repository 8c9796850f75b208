#pragma once

#include "singext/abgrp/morphism.hpp"
#include "singext/abgrp/smith.hpp"

#include <compare>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace singext {

using abgrp::FinAbGroup;
using abgrp::GroupMor;
using abgrp::Int;
using abgrp::IntMatrix;
using abgrp::IntVec;

/// Encodable object descriptor shared by all constructions.
struct Obj {
  std::string kind;
  std::string name;
  std::vector<Obj> parts;
  std::vector<long> data;

  static Obj named(std::string kind, std::string name) { return {std::move(kind), std::move(name), {}, {}}; }

  std::string to_string() const;
  std::strong_ordering operator<=>(const Obj& o) const;
  bool operator==(const Obj& o) const;
};

/// Morphisms are elements of hom groups in normal-form coordinates.
using Mor = IntVec;

/// Preadditive category with computable finitely generated hom groups.
class Preadditive {
public:
  virtual ~Preadditive() = default;

  virtual std::string name() const = 0;
  virtual FinAbGroup hom(const Obj& a, const Obj& b) const = 0;
  /// g o f for f: a -> b, g: b -> c
  virtual Mor compose(const Obj& a, const Obj& b, const Obj& c, const Mor& g, const Mor& f) const = 0;
  virtual Mor identity(const Obj& a) const = 0;
  /// Objects of the declared window, rank measured by the construction.
  virtual std::vector<Obj> window(std::size_t rank_bound) const = 0;
  virtual std::size_t rank(const Obj&) const { return 1; }
  virtual std::string describe(const Obj& a, const Obj& b, const Mor& f) const;

  Mor zero(const Obj& a, const Obj& b) const { return hom(a, b).zero(); }
  /// f_* : hom(x, a) -> hom(x, b) for f: a -> b
  GroupMor post(const Obj& x, const Obj& a, const Obj& b, const Mor& f) const;
  /// f^* : hom(b, y) -> hom(a, y) for f: a -> b
  GroupMor pre(const Obj& a, const Obj& b, const Obj& y, const Mor& f) const;
  bool is_iso(const Obj& a, const Obj& b, const Mor& f) const;
  std::optional<Mor> inverse(const Obj& a, const Obj& b, const Mor& f) const;
};

struct Biproduct {
  Obj sum;
  Mor i1, i2, r1, r2;
};

/// Additive category with optional translation functor.
class CompCategory : public Preadditive {
public:
  virtual Obj zero_object() const = 0;
  virtual Biproduct direct_sum(const Obj& a, const Obj& b) const = 0;
  virtual bool has_translation() const { return false; }
  virtual Obj translate(const Obj& a) const;
  virtual Mor translate_mor(const Obj& a, const Obj& b, const Mor& f) const;
};

/// A functor between computable categories, given on objects and on hom groups.
class Functor {
public:
  virtual ~Functor() = default;
  virtual Obj on_object(const Obj& a) const = 0;
  virtual GroupMor on_hom(const Obj& a, const Obj& b) const = 0;
  Mor apply(const Obj& a, const Obj& b, const Mor& f) const { return on_hom(a, b).apply(f); }
};

/// Replayable value table of a functor on a finite window.
struct FunctorTable {
  std::map<Obj, Obj> objects;
  std::map<std::pair<Obj, Obj>, GroupMor> homs;
};
FunctorTable tabulate(const Functor& F, const std::vector<Obj>& window);

/// Thread-safe memo table; values are computed outside the lock.
template <class K, class V>
class Memo {
public:
  template <class Fn>
  std::shared_ptr<const V> get(const K& key, Fn&& compute) const {
    {
      std::lock_guard<std::mutex> lock(mu_);
      if (auto it = table_.find(key); it != table_.end())
        return it->second;
    }
    auto value = std::make_shared<const V>(compute());
    std::lock_guard<std::mutex> lock(mu_);
    return table_.emplace(key, std::move(value)).first->second;
  }

private:
  mutable std::mutex mu_;
  mutable std::map<K, std::shared_ptr<const V>> table_;
};

/// Normal form of a finite direct sum of groups with block coordinates.
class BlockSum {
public:
  BlockSum() = default;
  explicit BlockSum(std::vector<FinAbGroup> blocks);

  const FinAbGroup& group() const { return pres_.group; }
  const std::vector<FinAbGroup>& blocks() const { return blocks_; }
  std::vector<IntVec> split(const IntVec& x) const;
  IntVec join(const std::vector<IntVec>& parts) const;

private:
  std::vector<FinAbGroup> blocks_;
  std::vector<std::size_t> offsets_;
  abgrp::PresentedGroup pres_;
};

/// Subgroup of a block sum, with encoding of ambient elements that lie in it.
class SubBlockSum {
public:
  SubBlockSum() = default;
  SubBlockSum(BlockSum ambient, const std::vector<IntVec>& generators);

  const FinAbGroup& group() const { return sub_.group; }
  const BlockSum& ambient() const { return ambient_; }
  std::vector<IntVec> split(const Mor& x) const { return ambient_.split(to_ambient(x)); }
  IntVec to_ambient(const Mor& x) const { return sub_.inclusion.apply(x); }
  /// Throws ContractViolation if y is not in the subgroup.
  Mor encode(const IntVec& y) const;
  Mor encode_parts(const std::vector<IntVec>& parts) const { return encode(ambient_.join(parts)); }

private:
  BlockSum ambient_;
  abgrp::Subgroup sub_;
  std::shared_ptr<abgrp::IntSolver> solver_;
};

} // namespace singext
