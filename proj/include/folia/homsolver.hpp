#pragma once

#include "folia/basic_space.hpp"
#include "folia/models.hpp"

namespace folia {

enum class HomMode { Into, Onto };

/// Polynomial equations on the entries of a linear map phi : V -> V'
/// cutting out the foliated maps: phi takes leaves into leaves iff every
/// pulled-back target generator is basic on the source. Onto mode appends
/// the transposed system. Variables are phi entries in row-major order,
/// phi_{i,j} at index i*source_dim + j.
struct HomVariety {
  std::size_t source_dim = 0, target_dim = 0;
  HomMode mode = HomMode::Into;
  std::vector<Polynomial> equations;
};

HomVariety hom_equations(const FoliationModel& source, const FoliationModel& target,
                         HomMode mode, const BasicOptions& opt = {});

/// Exact membership test of every pulled-back generator in the source basic
/// space (and the transposed test in onto mode).
bool is_foliated(const FoliationModel& source, const FoliationModel& target,
                 const Matrix& phi, HomMode mode, const BasicOptions& opt = {});

/// All equations vanish at phi.
bool check_variety(const HomVariety& hv, const Matrix& phi);

}  // namespace folia
