#pragma once

#include <string>
#include <vector>

#include "vrhom/homology/homology.hpp"

namespace vrhom {

/// Matrices of an induced map on homology, one per dimension 0..dims-1, in the
/// representative bases chosen by HomologyBasis (deterministic for a given
/// complex). Entries are field elements; 𝔽_p residues are stored as integers.
struct InducedMapResult {
  Coefficients coefficients = Coefficients::rationals();
  std::vector<Matrix<Rational>> maps;

  friend bool operator==(const InducedMapResult& a, const InducedMapResult& b) {
    return a.coefficients == b.coefficients && a.maps == b.maps;
  }

  bool is_identity() const {
    for (const auto& m : maps)
      if (!(m == Matrix<Rational>::identity(m.rows())) || m.rows() != m.cols()) return false;
    return true;
  }
};

namespace detail {

/// Image of basis simplex i of `dom` (dimension k) under a vertex map: a signed
/// codomain basis element, or nothing when degenerate or inside the codomain's
/// subcomplex.
inline std::optional<std::pair<std::size_t, int>> chain_image(const ChainComplex& dom, const ChainComplex& cod,
                                                               std::size_t k, std::size_t i, const VertexMap& f) {
  const auto& s = dom.simplex(k, i);
  std::vector<Index> image;
  for (Index v : s.vertices()) image.push_back(f[v]);
  // Sign of the sorting permutation, by counting inversions.
  int sign = 1;
  for (std::size_t a = 0; a < image.size(); ++a) {
    for (std::size_t b = a + 1; b < image.size(); ++b) {
      if (image[a] == image[b]) return std::nullopt;
      if (image[a] > image[b]) sign = -sign;
    }
  }
  auto pos = cod.position(Simplex::from_unsorted(image));
  if (!pos) return std::nullopt;
  return std::pair{*pos, sign};
}

template <class F>
SparseVec<F> push_forward(const F& field, const ChainComplex& dom, const ChainComplex& cod, std::size_t k,
                          const SparseVec<F>& chain, const VertexMap& f) {
  SparseVec<F> out;
  for (const auto& [i, value] : chain) {
    auto image = chain_image(dom, cod, k, i, f);
    if (!image) continue;
    SparseVec<F> term{{image->first, field.from_int(image->second)}};
    out = axpy(field, out, value, term);
  }
  return out;
}

template <class F>
Matrix<typename F::Element> homology_map(const F& field, const ChainComplex& dom, const ChainComplex& cod,
                                         std::size_t k, const VertexMap& f) {
  HomologyBasis<F> source(field, dom, k);
  HomologyBasis<F> target(field, cod, k);
  Matrix<typename F::Element> m(target.size(), source.size());
  for (std::size_t c = 0; c < source.size(); ++c) {
    auto coords = target.coordinates(push_forward(field, dom, cod, k, source.representatives()[c], f));
    for (std::size_t r = 0; r < coords.size(); ++r) m(r, c) = coords[r];
  }
  return m;
}

template <class F>
Matrix<Rational> to_rational_matrix(const F& field, const Matrix<typename F::Element>& m) {
  Matrix<Rational> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = field.to_rational(m(i, j));
  return out;
}

template <class F>
Matrix<typename F::Element> from_rational_matrix(const F& field, const Matrix<Rational>& m) {
  Matrix<typename F::Element> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = field.from_rational(m(i, j));
  return out;
}

/// Induced maps in dimensions below min(dom cap, cod cap): the exact range.
inline InducedMapResult induced(const ChainComplex& dom, const ChainComplex& cod, const VertexMap& f,
                                const Coefficients& coeffs) {
  const std::size_t dims = std::min(dom.top(), cod.top());
  InducedMapResult result;
  result.coefficients = coeffs;
  visit_field(coeffs, [&](const auto& field) {
    for (std::size_t k = 0; k < dims; ++k)
      result.maps.push_back(to_rational_matrix(field, homology_map(field, dom, cod, k, f)));
    return 0;
  });
  return result;
}

}  // namespace detail

/// f_* on homology over a field, in dimensions 0..min(caps)-1.
inline InducedMapResult induced_map(const SimplicialVertexMap& f, const Coefficients& coeffs) {
  ChainComplex dom(f.domain());
  ChainComplex cod(f.codomain());
  return detail::induced(dom, cod, f.assignment(), coeffs);
}

/// f_* on relative homology of pairs.
inline InducedMapResult induced_map(const PairMap& f, const Coefficients& coeffs) {
  ChainComplex dom(f.domain());
  ChainComplex cod(f.codomain());
  return detail::induced(dom, cod, f.assignment(), coeffs);
}

/// Inclusion of the subcomplex of a pair into the total complex.
inline InducedMapResult induced_inclusion(const ComplexPair& pair, const Coefficients& coeffs) {
  ChainComplex dom(pair.sub());
  ChainComplex cod(pair.total());
  VertexMap id(pair.total().space()->size());
  for (Index v = 0; v < id.size(); ++v) id[v] = v;
  return detail::induced(dom, cod, id, coeffs);
}

/// g_* ∘ f_* computed with the field arithmetic of the coefficients.
inline InducedMapResult compose(const InducedMapResult& g, const InducedMapResult& f) {
  if (!(g.coefficients == f.coefficients)) throw Error(ErrorKind::invalid_argument, "coefficient mismatch");
  InducedMapResult out;
  out.coefficients = f.coefficients;
  const std::size_t dims = std::min(g.maps.size(), f.maps.size());
  visit_field(f.coefficients, [&](const auto& field) {
    for (std::size_t k = 0; k < dims; ++k) {
      auto product = field_multiply(field, detail::from_rational_matrix(field, g.maps[k]),
                                    detail::from_rational_matrix(field, f.maps[k]));
      out.maps.push_back(detail::to_rational_matrix(field, product));
    }
    return 0;
  });
  return out;
}

/// One group of the long exact sequence with the ranks of its incoming and
/// outgoing maps.
struct LesSlot {
  std::string group;  // e.g. "H_1(X,A)"
  std::size_t degree = 0;
  std::size_t dimension = 0;
  std::size_t rank_in = 0;
  std::size_t rank_out = 0;
  bool composite_zero = true;
  bool exact = true;
};

struct LesReport {
  bool exact = true;
  std::vector<LesSlot> slots;
};

namespace detail {

template <class F>
LesReport les_report(const F& field, const ComplexPair& pair, std::size_t top_dim) {
  using Elem = typename F::Element;
  using Mat = Matrix<Elem>;
  const auto& total = pair.total();
  const auto& sub = pair.sub();
  ChainComplex ca(sub);
  ChainComplex cx(total);
  ChainComplex cxa(total, &sub);

  std::vector<HomologyBasis<F>> ha, hx, hxa;
  for (std::size_t k = 0; k <= top_dim; ++k) {
    ha.emplace_back(field, ca, k);
    hx.emplace_back(field, cx, k);
    hxa.emplace_back(field, cxa, k);
  }

  // Chains of A and of (X, A) viewed in X's basis; X's basis is all of total.
  auto a_to_x = [&](std::size_t k, const SparseVec<F>& v) {
    SparseVec<F> out;
    for (const auto& [i, value] : v) out.emplace_back(*cx.position(ca.simplex(k, i)), value);
    std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
    return out;
  };
  auto x_to_xa = [&](std::size_t k, const SparseVec<F>& v) {
    SparseVec<F> out;
    for (const auto& [i, value] : v)
      if (auto p = cxa.position(cx.simplex(k, i))) out.emplace_back(*p, value);
    return out;
  };
  auto xa_to_x = [&](std::size_t k, const SparseVec<F>& v) {
    SparseVec<F> out;
    for (const auto& [i, value] : v) out.emplace_back(*cx.position(cxa.simplex(k, i)), value);
    std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
    return out;
  };
  auto x_to_a = [&](std::size_t k, const SparseVec<F>& v) {
    SparseVec<F> out;
    for (const auto& [i, value] : v) {
      auto p = ca.position(cx.simplex(k, i));
      if (!p) throw Error(ErrorKind::invalid_argument, "connecting chain leaves the subcomplex");
      out.emplace_back(*p, value);
    }
    std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
    return out;
  };
  auto x_boundary = [&](std::size_t k, const SparseVec<F>& v) {
    SparseVec<F> out;
    for (const auto& [i, value] : v) out = axpy(field, out, value, cx.boundary_vector(field, k, i));
    return out;
  };

  auto build = [&](std::size_t rows, std::size_t cols, auto&& column) {
    Mat m(rows, cols);
    for (std::size_t c = 0; c < cols; ++c) {
      auto coords = column(c);
      for (std::size_t r = 0; r < rows; ++r) m(r, c) = coords[r];
    }
    return m;
  };

  std::vector<Mat> inc(top_dim + 1), quo(top_dim + 1), conn(top_dim + 1);
  for (std::size_t k = 0; k <= top_dim; ++k) {
    inc[k] = build(hx[k].size(), ha[k].size(),
                   [&](std::size_t c) { return hx[k].coordinates(a_to_x(k, ha[k].representatives()[c])); });
    quo[k] = build(hxa[k].size(), hx[k].size(),
                   [&](std::size_t c) { return hxa[k].coordinates(x_to_xa(k, hx[k].representatives()[c])); });
    if (k > 0) {
      conn[k] = build(ha[k - 1].size(), hxa[k].size(), [&](std::size_t c) {
        return ha[k - 1].coordinates(x_to_a(k - 1, x_boundary(k, xa_to_x(k, hxa[k].representatives()[c]))));
      });
    } else {
      conn[k] = Mat(0, hxa[0].size());
    }
  }

  LesReport report;
  auto slot = [&](std::string name, std::size_t degree, std::size_t dimension, const Mat& in, const Mat& out) {
    LesSlot s;
    s.group = std::move(name);
    s.degree = degree;
    s.dimension = dimension;
    s.rank_in = field_rank(field, in);
    s.rank_out = field_rank(field, out);
    auto composite = field_multiply(field, out, in);
    for (std::size_t i = 0; i < composite.rows(); ++i)
      for (std::size_t j = 0; j < composite.cols(); ++j) s.composite_zero = s.composite_zero && field.is_zero(composite(i, j));
    s.exact = s.composite_zero && s.rank_in + s.rank_out == dimension;
    report.exact = report.exact && s.exact;
    report.slots.push_back(std::move(s));
  };

  for (std::size_t k = top_dim + 1; k-- > 0;) {
    const std::string d = std::to_string(k);
    if (k < top_dim) slot("H_" + d + "(A)", k, ha[k].size(), conn[k + 1], inc[k]);
    slot("H_" + d + "(X)", k, hx[k].size(), inc[k], quo[k]);
    slot("H_" + d + "(X,A)", k, hxa[k].size(), quo[k], conn[k]);
  }
  return report;
}

}  // namespace detail

/// Builds H_k(A) → H_k(X) → H_k(X,A) → H_{k-1}(A) for k <= top_dim (connecting
/// map: lift a relative cycle, take its boundary in X, read it in A) and checks
/// image = kernel at every group whose incoming and outgoing maps are known.
/// Needs both complexes enumerated to top_dim + 1.
inline LesReport check_les_exactness(const ComplexPair& pair, const Coefficients& coeffs, std::size_t top_dim) {
  if (pair.total().max_dim() < top_dim + 1 && !pair.total().exhausted()) {
    throw Error(ErrorKind::invalid_argument, "complexes must be enumerated to top_dim + 1");
  }
  if (pair.total().max_dim() < top_dim + 1) {
    // Exhausted complexes: extend the cap with empty layers.
    auto grow = [&](const SimplicialComplex& k) {
      std::vector<std::vector<Simplex>> layers;
      for (std::size_t d = 0; d <= k.max_dim(); ++d) layers.push_back(k.simplices(d));
      return share(SimplicialComplex(k.space(), std::move(layers), top_dim + 1, true));
    };
    ComplexPair grown(grow(pair.total()), grow(pair.sub()));
    return visit_field(coeffs, [&](const auto& f) { return detail::les_report(f, grown, top_dim); });
  }
  return visit_field(coeffs, [&](const auto& f) { return detail::les_report(f, pair, top_dim); });
}

}  // namespace vrhom
