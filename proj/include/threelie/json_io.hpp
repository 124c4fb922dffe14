#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "threelie/algebra.hpp"
#include "threelie/cocycle.hpp"
#include "threelie/double.hpp"
#include "threelie/tensor.hpp"

namespace threelie::json_io {

using Json = nlohmann::json;

/// Canonical string. Readers also accept integers and the list form
/// [{coeff: "n/d", monomial: [[name, exp], ...]}, ...].
Json to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);
Json scalar_terms_json(const Scalar& s);

Json to_json(const Vector& v);
Vector vector_from_json(const Json& j);

/// {arity, dim, terms: [{idx, coeff}]} with terms sorted by idx.
Json to_json(const Tensor& t);
Tensor tensor_from_json(const Json& j);

/// {dim, brackets: [{ijk, value}]} with canonical keys.
Json to_json(const ThreeLieAlgebra& a);
ThreeLieAlgebra algebra_from_json(const Json& j);

/// {dim, components: [tensor, ...]}. The reader also accepts
/// {dim, wedges: [{i, pqr, coeff}]}, meaning Delta(e_i) += coeff e_p^e_q^e_r.
Json to_json(const Coproduct& c);
Coproduct coproduct_from_json(const Json& j);

Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

/// Object of parameter names to scalar values: {"a_2_3": "1", ...}. With
/// skew, keys must be a_i_j with i<j and a^{ji} = -a^{ij} is filled in.
RMatrix rmatrix_from_json(const Json& j, int dim, bool skew);
Json to_json(const RMatrix& r);
/// {"k": "1", "c1": "2/3"}.
std::map<std::string, Rational> bindings_from_json(const Json& j);

Json to_json(const FiReport& r);
Json to_json(const RepresentationReport& r);
Json to_json(const CocycleReport& r);
Json to_json(const LocalCocycleReport& r);
Json to_json(const ConstraintReport& r);
Json to_json(const ManinReport& r);
Json to_json(const CatalogEntry& e);
Json to_json(const DeltaFamily& f);

/// {base_id, base_dim, parameters, algebra, gram}.
Json to_json(const DoubleAlgebra& d);
DoubleAlgebra double_from_json(const Json& j);

}  // namespace threelie::json_io
