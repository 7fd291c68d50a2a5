#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vrhom/complex/simplicial_complex.hpp"

namespace vrhom {

/// Set image of a simplex under a vertex function; duplicates collapse.
inline Simplex image_of(const Simplex& s, const VertexMap& f) {
  std::vector<Index> v;
  v.reserve(s.size());
  for (Index x : s.vertices()) v.push_back(f.at(x));
  return Simplex::from_unsorted(std::move(v));
}

/// A vertex function that sends every domain simplex onto a codomain simplex.
/// The simplicial property is checked at construction.
class SimplicialVertexMap {
 public:
  SimplicialVertexMap(ComplexRef domain, ComplexRef codomain, VertexMap assignment)
      : domain_(std::move(domain)), codomain_(std::move(codomain)), f_(std::move(assignment)) {
    require_vertex_map(f_, domain_->space(), codomain_->space());
    for (std::size_t k = 0; k <= domain_->max_dim(); ++k) {
      for (const auto& s : domain_->simplices(k)) {
        auto image = image_of(s, f_);
        if (!codomain_->contains(image)) {
          const auto& cod = *codomain_->space();
          throw Error(ErrorKind::not_simplicial, "image of " + s.to_string(domain_->space().get()) + " is " +
                                                     image.to_string(&cod) + ", not a simplex");
        }
      }
    }
  }

  const SimplicialComplex& domain() const noexcept { return *domain_; }
  const SimplicialComplex& codomain() const noexcept { return *codomain_; }
  const ComplexRef& domain_ref() const noexcept { return domain_; }
  const ComplexRef& codomain_ref() const noexcept { return codomain_; }
  const VertexMap& assignment() const noexcept { return f_; }
  Index operator()(Index v) const { return f_.at(v); }

 private:
  ComplexRef domain_;
  ComplexRef codomain_;
  VertexMap f_;
};

inline SimplicialVertexMap simplicial_map(const VertexMap& f, ComplexRef dom, ComplexRef cod) {
  return SimplicialVertexMap(std::move(dom), std::move(cod), f);
}

/// g ∘ f.
inline SimplicialVertexMap compose(const SimplicialVertexMap& g, const SimplicialVertexMap& f) {
  if (!(f.codomain() == g.domain())) throw Error(ErrorKind::invalid_argument, "maps are not composable");
  VertexMap h(f.assignment().size());
  for (Index v = 0; v < h.size(); ++v) h[v] = g(f(v));
  return SimplicialVertexMap(f.domain_ref(), g.codomain_ref(), std::move(h));
}

inline SimplicialVertexMap identity_map(const ComplexRef& k) {
  VertexMap id(k->space()->size());
  for (Index v = 0; v < id.size(); ++v) id[v] = v;
  return SimplicialVertexMap(k, k, std::move(id));
}

/// A simplicial map of pairs: the underlying map also sends sub into sub.
class PairMap {
 public:
  PairMap(const ComplexPair& domain, const ComplexPair& codomain, VertexMap assignment)
      : domain_(domain), codomain_(codomain), f_(std::move(assignment)) {
    (void)SimplicialVertexMap(domain_.total_ref(), codomain_.total_ref(), f_);
    (void)SimplicialVertexMap(domain_.sub_ref(), codomain_.sub_ref(), f_);
  }

  const ComplexPair& domain() const noexcept { return domain_; }
  const ComplexPair& codomain() const noexcept { return codomain_; }
  const VertexMap& assignment() const noexcept { return f_; }

 private:
  ComplexPair domain_;
  ComplexPair codomain_;
  VertexMap f_;
};

struct ContiguityVerdict {
  bool contiguous = true;
  std::optional<Simplex> witness;  // f(σ) ∪ g(σ), not a codomain simplex
};

/// f and g are contiguous iff f(σ) ∪ g(σ) is a codomain simplex for every domain simplex σ.
inline ContiguityVerdict are_contiguous(const SimplicialVertexMap& f, const SimplicialVertexMap& g) {
  if (!(f.domain() == g.domain()) || !(f.codomain() == g.codomain())) {
    throw Error(ErrorKind::invalid_argument, "contiguity needs maps with equal domain and codomain");
  }
  const auto& dom = f.domain();
  for (std::size_t k = 0; k <= dom.max_dim(); ++k) {
    for (const auto& s : dom.simplices(k)) {
      std::vector<Index> v;
      for (Index x : s.vertices()) {
        v.push_back(f(x));
        v.push_back(g(x));
      }
      auto joined = Simplex::from_unsorted(std::move(v));
      // Unions above the codomain cap cannot be certified either way.
      if (joined.dim() > f.codomain().max_dim() && !f.codomain().exhausted()) {
        throw Error(ErrorKind::invalid_argument, "codomain enumerated too shallowly to test contiguity");
      }
      if (!f.codomain().contains(joined)) return {false, joined};
    }
  }
  return {};
}

}  // namespace vrhom
