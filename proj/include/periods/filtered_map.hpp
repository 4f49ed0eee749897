#pragma once

#include "periods/bifiltered.hpp"

namespace periods {

enum class FiltrationKind { weight, hodge };

struct FilteredMap {
  Mat matrix;  // dim(target) x dim(source)
  const BifilteredSpace* source = nullptr;
  const BifilteredSpace* target = nullptr;

  bool w_compatible() const;  // matrix(W_n src) inside W_n tgt for all n
  bool f_compatible() const;
};

// Strictness: image of fil^n(source) equals fil^n(target) cap image, at
// every jump of either side.
bool is_strict(const FilteredMap& f, FiltrationKind kind);

struct ExactnessReport {
  bool exact_with_strictness = false;  // (1)
  bool levelwise_exact = false;        // (2)
  bool graded_exact = false;           // (3)
};

// For a composable pair L -> M -> N with g o f = 0 and finite filtrations,
// evaluates the three exactness conditions; (1) and (2) agree always and (3)
// joins them under the stated hypotheses.
ExactnessReport check_exactness_equivalences(const FilteredMap& f,
                                             const FilteredMap& g,
                                             FiltrationKind kind);

}  // namespace periods
