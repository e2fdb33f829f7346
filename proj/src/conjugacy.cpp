#include "raag/conjugacy.hpp"

#include <algorithm>

#include "raag/match.hpp"

namespace raag {

NormalForm normal_form(DefiningGraph const& g, std::span<Letter const> w) {
  return NormalForm{sigma_star(pi_star(g, w))};
}

bool is_identity(DefiningGraph const& g, std::span<Letter const> w) {
  return pi_star(g, w).empty();
}

bool is_normal(DefiningGraph const& g, std::span<Letter const> w) {
  for (auto const& l : w) {
    if (l.gen >= g.size()) {
      return false;
    }
  }
  Word const nf = normal_form(g, w).word;
  return std::equal(nf.begin(), nf.end(), w.begin(), w.end());
}

bool is_cyclic_normal(DefiningGraph const& g, std::span<Letter const> w) {
  if (w.empty()) {
    return true;
  }
  if (!is_normal(g, w) || !is_cyclically_reduced(pi_star(g, w))) {
    return false;
  }
  return is_normal(g, concat(w, w));
}

Word CyclicNormalFactors::product() const {
  Word out;
  out.reserve(length());
  for (auto const& f : factors) {
    out.insert(out.end(), f.begin(), f.end());
  }
  return out;
}

std::size_t CyclicNormalFactors::length() const {
  std::size_t n = 0;
  for (auto const& f : factors) {
    n += f.size();
  }
  return n;
}

CyclicNormalFactors cyclic_normal_factors(DefiningGraph const& g,
                                          std::span<Letter const> w) {
  CyclicNormalFactors out;
  auto reduced = cyclic_reduce(pi_star(g, w));
  out.events = std::move(reduced.events);
  SupportGraph const support = support_graph(reduced.piling);
  out.components = support.components();
  auto parts = split_components(reduced.piling);
  out.factors.reserve(parts.size());
  for (std::size_t k = 0; k < parts.size(); ++k) {
    auto pyramid = pyramidalize(std::move(parts[k]));
    for (auto& e : pyramid.events) {
      e.factor = k;
      out.events.push_back(e);
    }
    out.factors.push_back(sigma_star(std::move(pyramid.piling)));
  }
  return out;
}

ConjugacyCertificate decide_conjugacy(DefiningGraph const& g,
                                      std::span<Letter const> w,
                                      std::span<Letter const> v) {
  ConjugacyCertificate cert;
  cert.first = cyclic_normal_factors(g, w);
  cert.second = cyclic_normal_factors(g, v);
  if (cert.first.components != cert.second.components) {
    return cert;
  }
  cert.conjugate = true;
  for (std::size_t k = 0; k < cert.first.factors.size(); ++k) {
    auto shift = cyclic_equal(cert.first.factors[k], cert.second.factors[k]);
    cert.shifts.push_back(shift);
    if (!shift) {
      cert.conjugate = false;
    }
  }
  return cert;
}

bool conjugate_in_raag(DefiningGraph const& g, std::span<Letter const> w,
                       std::span<Letter const> v) {
  return decide_conjugacy(g, w, v).conjugate;
}

}  // namespace raag
