#pragma once

#include <string>
#include <vector>

#include "riswpc/config.hpp"
#include "riswpc/csv.hpp"
#include "riswpc/sweep.hpp"

namespace riswpc {

enum class Figure { fig2, fig3, fig4, fig5, fig6 };

Figure parse_figure(const std::string& name);
const char* to_string(Figure fig);

struct CsvFile {
  std::string name;
  CsvTable table;
};

/// Data series behind each figure, computed around `base` (default: the
/// reference parameter set).
///   fig2  ergodic rate vs P_p: active b=1, active b=4, active b=16, passive
///   fig3  outage vs P_p: M in {16, 32} x {active, passive}
///   fig4  ergodic and effective rate vs alpha, with optimum rows marked
///   fig5  expected RIS power over rho in [1, 6] x P_p in [0, 30] dBm
///   fig6  expected RIS power over M in [4, 64] x alpha in {0.1, 0.9}
std::vector<CsvFile> reproduce_figure(Figure fig, const SystemConfig& base = {}, RunOptions opts = {});

}  // namespace riswpc
