// Copyright 2026 The Ecstego Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ECSTEGO_SPECIAL_HPP_
#define ECSTEGO_SPECIAL_HPP_

#include <cstddef>

namespace ecstego {

// Regularized upper incomplete gamma Q(a, x) = Gamma(a, x)/Gamma(a),
// a > 0, x >= 0. Series expansion for x < a + 1, continued fraction
// (modified Lentz) otherwise; relative error near 1e-15.
double igamc(double a, double x);

// Chi-square survival function with dof degrees of freedom:
// igamc(dof/2, chisq/2).
double chisq_pvalue(double chisq, double dof);

}  // namespace ecstego

#endif  // ECSTEGO_SPECIAL_HPP_
