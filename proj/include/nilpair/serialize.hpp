#ifndef NILPAIR_SERIALIZE_HPP
#define NILPAIR_SERIALIZE_HPP

#include <string>

#include "nilpair/engine.hpp"
#include "nilpair/rootsys.hpp"

// JSON debug serialization: matrices as arrays of "p/q" strings, subspaces as
// lists of matrices, bi-gradings as (q1, q2, dim) triples.

namespace nilpair {

std::string matrix_to_json(const QMat& m);
QMat matrix_from_json(const std::string& text);

std::string subspace_to_json(const Model& g, const Subspace& s);

std::string bigrading_to_json(const BiGrading& bg);

std::string root_system_to_json(const RootSystem& rs);

}  // namespace nilpair

#endif
