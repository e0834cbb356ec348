#include "cyclecert/class_algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace cyclecert {

std::string SymClass::str() const {
  switch (kind) {
    case SymKind::C: return "c";
    case SymKind::CLambda: return "c_lambda";
    case SymKind::CZero: return "c_0";
    case SymKind::CK: return "c_K";
    case SymKind::CKLast: return "c_K_last";
    case SymKind::CB: {
      std::ostringstream os;
      os << "c_{" << h << ":" << s << "}";
      return os.str();
    }
  }
  return "?";
}

SymClass canonicalize(int h, const std::set<int>& S, int g, int n) {
  if (g < 3) throw std::invalid_argument("canonicalize: requires g >= 3");
  if (h < 0 || h > g - 1) throw std::invalid_argument("canonicalize: genus index out of range");
  for (int m : S)
    if (m < 1 || m > n + 1) throw std::invalid_argument("canonicalize: marking out of range");
  const int size = static_cast<int>(S.size());
  if (h == 0 && size < 2)
    throw std::invalid_argument("canonicalize: unstable label, h = 0 needs |S| >= 2");
  if (h == g - 1 && size > n - 1)
    throw std::invalid_argument("canonicalize: unstable label, h = g-1 needs |S| <= n-1");
  if (S.count(n + 1)) return SymClass::cb(g - 1 - h, n + 1 - size);
  return SymClass::cb(h, size);
}

std::vector<SymClass> generator_set(int g, int n) {
  if (g < 3) throw std::invalid_argument("generator_set: requires g >= 3");
  if (n < 1) throw std::invalid_argument("generator_set: requires n >= 1");
  std::vector<SymClass> out;
  out.push_back(SymClass::scalar(SymKind::C));
  out.push_back(SymClass::scalar(SymKind::CLambda));
  if (g >= 4) out.push_back(SymClass::scalar(SymKind::CZero));
  out.push_back(SymClass::scalar(SymKind::CK));
  out.push_back(SymClass::scalar(SymKind::CKLast));
  for (int h = 0; h <= g - 1; ++h) {
    int lo = (h == 0) ? 2 : 0;
    int hi = (h == g - 1) ? n - 1 : n;
    for (int s = lo; s <= hi; ++s) out.push_back(SymClass::cb(h, s));
  }
  return out;
}

void ClassVector::add(const SymClass& c, const Rational& v) {
  if (v == 0) return;
  auto it = coeff.find(c);
  if (it == coeff.end()) {
    coeff.emplace(c, v);
  } else {
    it->second += v;
    if (it->second == 0) coeff.erase(it);
  }
}

Rational ClassVector::get(const SymClass& c) const {
  auto it = coeff.find(c);
  return it == coeff.end() ? Rational(0) : it->second;
}

std::vector<Rational> ClassVector::dense(const std::vector<SymClass>& columns) const {
  std::vector<Rational> out;
  out.reserve(columns.size());
  std::size_t found = 0;
  for (const auto& c : columns) {
    auto it = coeff.find(c);
    if (it == coeff.end()) {
      out.emplace_back(0);
    } else {
      out.push_back(it->second);
      ++found;
    }
  }
  if (found != coeff.size())
    throw std::invalid_argument("ClassVector: coefficient on a symbol outside the column set");
  return out;
}

}  // namespace cyclecert
