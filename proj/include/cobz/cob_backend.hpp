#pragma once

#include <utility>

#include "cobz/backend.hpp"
#include "cobz/bordism.hpp"

namespace cobz {

// The diagram category itself as a backend: evaluating into it along the
// point (+, alpha(1)) is the identity functor, a useful self-check.
struct CobBackend {
  using Object = BoundaryObject;
  using Morphism = Bordism;

  Object unit_object() const { return BoundaryObject{}; }
  Object tensor_object(const Object& a, const Object& b) const { return a.tensor(b); }
  Morphism identity(const Object& x) const { return cobz::identity(x); }
  Morphism compose(const Morphism& f, const Morphism& g) const { return cobz::compose(f, g); }
  Morphism tensor(const Morphism& f, const Morphism& g) const { return cobz::tensor(f, g); }
  Morphism braiding(const Object& a, const Object& b) const { return cobz::braiding(a, b); }
  bool equal(const Morphism& f, const Morphism& g) const { return f == g; }
};

// Duality data for a boundary word together with an automorphism of it.
// Throws NotEndomorphism / NotInvertible when the data does not qualify.
inline DualizablePair<CobBackend> cob_pair(const BoundaryObject& x, Bordism automorphism) {
  if (automorphism.source() != x || automorphism.target() != x)
    throw NotEndomorphism("pair: automorphism boundaries '" + automorphism.source().to_string() +
                          "' -> '" + automorphism.target().to_string() +
                          "' do not match the object '" + x.to_string() + "'");
  Bordism inverse = inverse_of(automorphism);  // throws NotInvertible
  DualityData dd = duality_data(x);
  return DualizablePair<CobBackend>{x,
                                    std::move(dd.dual),
                                    std::move(dd.ev),
                                    std::move(dd.coev),
                                    std::move(automorphism),
                                    std::move(inverse)};
}

// The canonical point: the + point with the label-1 strand.
inline DualizablePair<CobBackend> plus_point_pair() {
  return cob_pair(BoundaryObject::point(Sign::plus), alpha(Int(1)));
}

}  // namespace cobz
