#include "rpv/state.hpp"

#include <sstream>

namespace rpv {

namespace {
const ArrayVal kEmptyArray{};
}

long long State::get_int(const std::string& name) const {
  auto it = scalars.find(name);
  if (it == scalars.end()) return 0;
  if (const long long* v = std::get_if<long long>(&it->second)) return *v;
  return 0;
}

bool State::get_bool(const std::string& name) const {
  auto it = scalars.find(name);
  if (it == scalars.end()) return false;
  if (const bool* v = std::get_if<bool>(&it->second)) return *v;
  return false;
}

const ArrayVal& State::get_array(const std::string& name) const {
  auto it = arrays.find(name);
  return it == arrays.end() ? kEmptyArray : it->second;
}

State State::normalized() const {
  State out;
  for (const auto& [k, v] : scalars) {
    if (const long long* i = std::get_if<long long>(&v)) {
      if (*i != 0) out.scalars.emplace(k, v);
    } else if (std::get<bool>(v)) {
      out.scalars.emplace(k, v);
    }
  }
  for (const auto& [k, a] : arrays) {
    if (!a.elems.empty() || a.dflt != 0) out.arrays.emplace(k, a);
  }
  return out;
}

bool State::same_valuation(const State& other) const {
  State a = normalized(), b = other.normalized();
  return a.scalars == b.scalars && a.arrays == b.arrays;
}

std::string State::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : scalars) {
    if (!first) os << ", ";
    first = false;
    os << k << "=";
    if (const long long* i = std::get_if<long long>(&v))
      os << *i;
    else
      os << (std::get<bool>(v) ? "true" : "false");
  }
  for (const auto& [k, a] : arrays) {
    if (!first) os << ", ";
    first = false;
    os << k << "=[";
    bool f2 = true;
    for (const auto& [i, v] : a.elems) {
      if (!f2) os << ", ";
      f2 = false;
      os << i << ":" << v;
    }
    os << "]";
    if (a.dflt != 0) os << "(default " << a.dflt << ")";
  }
  return os.str();
}

ArrayVal make_array(const std::vector<long long>& values) {
  ArrayVal a;
  for (size_t i = 0; i < values.size(); ++i) a.set(static_cast<long long>(i), values[i]);
  return a;
}

}  // namespace rpv
