#pragma once

#include <cmath>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace stfuse {

using Day = int;

/// Planar site coordinates in kilometers (inputs are pre-projected).
struct SpacePoint {
  double x = 0.0;
  double y = 0.0;
  double dist(const SpacePoint& o) const {
    return std::hypot(x - o.x, y - o.y);
  }
};

struct Site {
  std::string id;
  SpacePoint pos;
};

/// Reading source. BCO/BCI are daily; BCA is an indoor multiday aggregate.
enum class SourceKind { BCO, BCI, BCA };

const char* to_string(SourceKind k);
SourceKind source_kind_from_string(const std::string& s);

struct MonitorReading {
  int site = -1;          // index into Dataset::sites
  SourceKind kind = SourceKind::BCO;
  Day start_day = 0;
  int span_days = 1;      // 1 for BCO/BCI, J for BCA
  double y = 0.0;         // log concentration
};

/// Day of year with a fixed 365-day cycle; leap years are ignored.
inline int day_of_year(Day t) { return static_cast<int>(t % 365); }

/// Model-variant switches: U = short-range GP term, GST = long-range
/// spatio-temporal interaction smooth, A = use of the aggregated data.
struct ModelFlags {
  bool U = true;
  bool GST = false;
  bool A = true;
  std::string label() const {
    return "M(U=" + std::to_string(int(U)) + ",GST=" + std::to_string(int(GST)) +
           ",A=" + std::to_string(int(A)) + ")";
  }
};

/// All non-coefficient parameters. Which fields are active depends on the
/// model flags and on which sources the dataset contains.
struct HyperParams {
  double alpha1I = 1.0;     // indoor daily slope
  double alpha1A = 0.7;     // aggregate slope
  double sigma2_O = 0.05;   // outdoor daily error variance
  double sigma2_I = 0.1;    // indoor daily error variance
  double sigma2_A = 0.05;   // aggregate error variance
  double sigma2_a0 = 0.05;  // household intercept variance
  double tau2_S = 1.0;      // spatial smoothing variance
  double tau2_T = 1.0;      // temporal smoothing variance
  double tau2_ST_S = 1.0;   // interaction smoothing, spatial margin
  double tau2_ST_T = 1.0;   // interaction smoothing, temporal margin
  double sigma2_u = 0.1;    // GP variance
  double theta_S = 0.05;    // spatial decay, 1/km
  double theta_T = 0.1;     // temporal decay, 1/day
};

/// Coefficient vector v = (w; {alpha0_i}; alpha00) with recorded block
/// boundaries. w itself is (w_x, w_S, w_T, w_ST) in the free (constrained)
/// parameterization.
struct CoefBlocks {
  int x_begin = 0, x_dim = 0;
  int s_begin = 0, s_dim = 0;
  int t_begin = 0, t_dim = 0;
  int st_begin = 0, st_dim = 0;  // 0 when GST=0
  int a0_begin = 0, a0_dim = 0;  // household intercepts
  int a00_index = -1;            // -1 when no aggregate data
  int total = 0;
  int w_dim() const { return x_dim + s_dim + t_dim + st_dim; }
};

struct CoefVector {
  Eigen::VectorXd values;
  CoefBlocks blocks;
};

}  // namespace stfuse
