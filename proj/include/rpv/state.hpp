// Program states: total valuations with finite representation.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>

#include "rpv/ast.hpp"

namespace rpv {

// Integer arrays are total functions Z -> Z: a finite map plus a default
// value for every unmapped index.
struct ArrayVal {
  std::map<long long, long long> elems;
  long long dflt = 0;

  long long get(long long i) const {
    auto it = elems.find(i);
    return it == elems.end() ? dflt : it->second;
  }
  void set(long long i, long long v) {
    if (v == dflt) elems.erase(i); else elems[i] = v;
  }
  bool operator==(const ArrayVal& o) const { return dflt == o.dflt && elems == o.elems; }
  bool operator!=(const ArrayVal& o) const { return !(*this == o); }
};

using Value = std::variant<long long, bool>;

struct State {
  std::map<std::string, Value> scalars;
  std::map<std::string, ArrayVal> arrays;

  // Reads are total: unmapped variables hold the type default.
  long long get_int(const std::string& name) const;
  bool get_bool(const std::string& name) const;
  const ArrayVal& get_array(const std::string& name) const;

  void set_int(const std::string& name, long long v) { scalars[name] = v; }
  void set_bool(const std::string& name, bool v) { scalars[name] = v; }
  void set_array(const std::string& name, ArrayVal v) { arrays[name] = std::move(v); }
  void set_array_elem(const std::string& name, long long i, long long v) {
    arrays[name].set(i, v);
  }

  // Drops default-valued entries so semantically equal states compare equal.
  State normalized() const;
  bool same_valuation(const State& other) const;

  std::string str() const;
};

// Fills an array with `values` at indices 0..n-1.
ArrayVal make_array(const std::vector<long long>& values);

}  // namespace rpv
