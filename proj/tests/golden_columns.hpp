// Copyright 2026 The chainint Authors
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

#pragma once

#include <vector>

// Reference column expressions: candidate row, Hamiltonian row, result row.
// Words are positioned; (II) blocks pad leading offsets. Unknown
// coefficients q are set to 1.
struct GoldenColumn {
  const char* group;
  const char* a_coeff;
  const char* a_word;
  const char* b_coeff;
  const char* b_word;
  const char* result;
};

inline const std::vector<GoldenColumn>& golden_columns() {
  static const std::vector<GoldenColumn> rows = {
      {"notation", "1", "XYZ", "1", "IIYZ", "-1 * XYXZ"},
      {"fredkin", "1", "(YY)(XX)", "1", "(II)(IY)(YI)", "1 * (YY)(XZ)(YI)"},
      {"fredkin", "1", "(IX)(XZ)", "t", "(II)(XX)(ZI)", "t * (IX)(IY)(ZI)"},
      {"fredkin", "1", "(II)(XX)(ZI)", "t", "(IX)(XZ)", "-t * (IX)(IY)(ZI)"},
      {"fredkin", "1", "(IZ)(ZI)", "t", "(II)(XX)(ZI)", "t * (IZ)(YX)(ZI)"},
      {"fredkin", "1", "(II)(XX)(ZI)", "-2*t^2", "(IZ)(ZI)", "2*t^2 * (IZ)(YX)(ZI)"},
      {"fredkin", "t", "(IX)(XZ)", "t", "(II)(IY)(YZ)", "-t^2 * (IX)(XX)(YZ)"},
      {"fredkin", "t", "(IX)(XZ)", "t", "(II)(IX)(XZ)", "t^2 * (IX)(XY)(XZ)"},
      {"fredkin", "t", "(IX)(XZ)", "-2*t", "(II)(IX)(XI)", "-2*t^2 * (IX)(XY)(XI)"},
      {"fredkin", "t", "(IX)(XZ)", "-2*t", "(II)(IY)(YI)", "2*t^2 * (IX)(XX)(YI)"},
      {"fredkin", "-t^2", "(IX)(XX)(YZ)", "-2*t", "(II)(IX)(XI)", "-2*t^3 * (IX)(XI)(ZZ)"},
      {"fredkin", "t^2", "(IX)(XY)(XZ)", "-2*t", "(II)(IY)(YI)", "-2*t^3 * (IX)(XI)(ZZ)"},
      {"fredkin", "-2*t^2", "(IX)(XY)(XI)", "t", "(II)(IY)(YZ)", "-2*t^3 * (IX)(XI)(ZZ)"},
      {"fredkin", "2*t^2", "(IX)(XX)(YI)", "t", "(II)(IX)(XZ)", "-2*t^3 * (IX)(XI)(ZZ)"},
      {"min:Ia", "c1", "(XX)(ZI)", "c1", "(II)(XX)(ZI)", "c1^2 * (XX)(YX)(ZI)"},
      {"min:Ia", "c2", "(IZ)(XX)", "c2", "(II)(IZ)(XX)", "-c2^2 * (IZ)(XY)(XX)"},
      {"min:Ia", "c1^2", "(XX)(YX)(ZI)", "c1", "(XX)(ZI)", "c1^3 * (II)(XX)(ZI)"},
      {"min:Ia", "c1^2", "(XX)(YX)(ZI)", "c1", "(II)(XX)(ZI)", "-c1^3 * (XX)(ZI)"},
      {"min:Ia", "-c2^2", "(IZ)(XY)(XX)", "c2", "(IZ)(XX)", "c2^3 * (II)(IZ)(XX)"},
      {"min:Ia", "-c2^2", "(IZ)(XY)(XX)", "c2", "(II)(IZ)(XX)", "-c2^3 * (IZ)(XX)"},
      {"min:IIIa", "c1", "(IX)(XZ)", "c1", "(II)(IX)(XZ)", "c1^2 * (IX)(XY)(XZ)"},
      {"min:IIIa", "c2", "(IZ)(YY)", "c1", "(II)(IX)(XZ)", "-c1*c2 * (IZ)(YZ)(XZ)"},
      {"min:IIIa", "c2", "(IZ)(YY)", "c2", "(II)(IZ)(YY)", "c2^2 * (IZ)(YX)(YY)"},
      {"min:IIIa", "c1^2", "(IX)(XY)(XZ)", "c2", "(II)(IZ)(YY)", "-c1^2*c2 * (IX)(XX)(ZX)"},
      {"min:IIIa", "c2^2", "(IZ)(YX)(YY)", "c1", "(IX)(XZ)", "c1*c2^2 * (IY)(ZY)(YY)"},
      {"min:IIIa", "c1*c2", "(II)(IY)(ZX)", "c1", "(IX)(XZ)", "c1^2*c2 * (IX)(XX)(ZX)"},
      {"min:IIIa", "c1*c2", "(IY)(ZX)", "c2", "(II)(IZ)(YY)", "-c1*c2^2 * (IY)(ZY)(YY)"},
      {"min:IIIa", "-c1*c2", "(IZ)(YZ)(XZ)", "c1", "(II)(IX)(XZ)", "-c1^2*c2 * (IZ)(YY)(II)"},
      {"min:IIIa", "-c1*c2", "(IZ)(YZ)(XZ)", "c2", "(IZ)(YY)", "c1*c2^2 * (II)(IX)(XZ)"},
      {"min:IIIa", "c1*c2", "(IY)(ZX)", "c1", "(IX)(XZ)", "c1^2*c2 * (IZ)(YY)"},
      {"min:IIIa", "c1*c2", "(IY)(ZX)", "c2", "(IZ)(YY)", "-c1*c2^2 * (IX)(XZ)"},
      {"min:IVa", "c2", "(IY)(YZ)", "c1", "(II)(IX)(XI)", "c1*c2 * (IY)(YY)(XI)"},
      {"min:IVa", "c2", "(IY)(YZ)", "c2", "(II)(IY)(YZ)", "-c2^2 * (IY)(YX)(YZ)"},
      {"min:IVa", "c1*c2", "(IY)(YY)(XI)", "c2", "(II)(IY)(YZ)", "c1*c2^2 * (IY)(YI)(ZZ)"},
      {"min:IVa", "-c2^2", "(IY)(YX)(YZ)", "c1", "(II)(IX)(XI)", "c1*c2^2 * (IY)(YI)(ZZ)"},
      {"ext:III", "1", "(IZ)(ZI)", "c1", "(II)(XX)(ZI)", "c1 * (IZ)(YX)(ZI)"},
      {"ext:III", "1", "(II)(IZ)(YY)", "c2", "(IZ)(YY)", "-c2 * (IZ)(YX)(YY)"},
      {"ext:III", "1", "(IZ)(ZI)", "c1", "(XX)(ZI)", "c1 * (XY)(II)"},
      {"ext:III", "1", "(IZ)(ZI)", "c2", "(IZ)(YY)", "-c2 * (II)(XY)"},
      {"ext:I", "c1", "(IX)(XZ)", "c1", "(II)(XX)(ZI)", "c1^2 * (IX)(IY)(ZI)"},
      {"ext:I", "c2", "(IZ)(XX)", "c2", "(II)(ZX)(XI)", "-c2^2 * (IZ)(YI)(XI)"},
      {"ext:I", "c2", "(ZX)(XI)", "c2", "(II)(ZX)(XI)", "-c2^2 * (ZX)(YX)(XI)"},
      {"ext:I", "c1^2", "(IX)(XY)(XZ)", "c1", "(XX)(ZI)", "-c1^3 * (XI)(YY)(XZ)"},
      {"ext:I", "c1^2", "(XX)(YX)(ZI)", "c1", "(II)(IX)(XZ)", "c1^3 * (XX)(YI)(YZ)"},
      {"ext:I", "-c2^2", "(IZ)(XY)(XX)", "c2", "(ZX)(XI)", "-c2^3 * (ZY)(IY)(XX)"},
      {"ext:I", "-c2^2", "(ZX)(YX)(XI)", "c2", "(II)(IZ)(XX)", "c2^3 * (ZX)(YY)(IX)"},
      {"ext:I", "c1^2", "(XI)(YZ)", "c1", "(II)(IX)(XZ)", "c1^3 * (XI)(YY)(XZ)"},
      {"ext:I", "c1^2", "(II)(XI)(YZ)", "c1", "(XX)(ZI)", "-c1^3 * (XX)(YI)(YZ)"},
      {"ext:I", "-c2^2", "(ZY)(IX)", "c2", "(II)(IZ)(XX)", "c2^3 * (ZY)(IY)(XX)"},
      {"ext:I", "-c2^2", "(II)(ZY)(IX)", "c2", "(ZX)(XI)", "-c2^3 * (ZX)(YY)(IX)"},
      {"ext:I", "c1^2", "(IX)(IY)(ZI)", "c1", "(IX)(XZ)", "c1^3 * (II)(XX)(ZI)"},
      {"ext:I", "c1^2", "(IX)(IY)(ZI)", "c1", "(II)(XX)(ZI)", "-c1^3 * (IX)(XZ)(II)"},
      {"ext:I", "-c2^2", "(IZ)(YI)(XI)", "c2", "(IZ)(XX)", "c2^3 * (II)(ZX)(XI)"},
      {"ext:I", "-c2^2", "(IZ)(YI)(XI)", "c2", "(II)(ZX)(XI)", "-c2^3 * (IZ)(XX)(II)"},
      {"ext:I", "c1^2", "(XI)(YZ)", "c1", "(IX)(XZ)", "-c1^3 * (XX)(ZI)"},
      {"ext:I", "c1^2", "(XI)(YZ)", "c1", "(XX)(ZI)", "c1^3 * (IX)(XZ)"},
      {"ext:I", "-c2^2", "(ZY)(IX)", "c2", "(IZ)(XX)", "-c2^3 * (ZX)(XI)"},
      {"ext:I", "-c2^2", "(ZY)(IX)", "c2", "(ZX)(XI)", "c2^3 * (IZ)(XX)"},
  };
  return rows;
}
