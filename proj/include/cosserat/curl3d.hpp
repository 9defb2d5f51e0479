#pragma once

#include "cosserat/chart.hpp"
#include "cosserat/field.hpp"

namespace cosserat {

// curl v = -v_{,i} x g^i
Vec3 curl_vec(const VecField3& v, const Chart3& chart, const Vec3& x);

// Curl T = -T_{,i} x g^i (row-wise convention; the transposed convention
// of other authors is available via curl_tensor_transposed)
Mat3 curl_tensor(const MatField3& t, const Chart3& chart, const Vec3& x);
Mat3 curl_tensor_transposed(const MatField3& t, const Chart3& chart,
                            const Vec3& x);

enum class ComponentRoute { Covariant, Mixed };

// Curl T assembled from covariant components T_{sj|i} (or mixed
// components T^s_{.j|i}) and the epsilon tensor.
Mat3 curl_tensor_components(const MatField3& t, const Chart3& chart,
                            const Vec3& x,
                            ComponentRoute route = ComponentRoute::Covariant);

enum class RowRoute { ContravariantCarrier, CovariantCarrier };

// Row-wise Curl: g^i (x) curl_cov(T_i) with T_i = T^T g_i, or
// g_i (x) curl_cov(T^i) with T^i = T^T g^i.
Mat3 curl_rowwise(const MatField3& t, const Chart3& chart, const Vec3& x,
                  RowRoute route = RowRoute::ContravariantCarrier);

}  // namespace cosserat
