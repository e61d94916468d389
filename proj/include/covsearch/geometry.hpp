#ifndef COVSEARCH_GEOMETRY_HPP_
#define COVSEARCH_GEOMETRY_HPP_

#include <cmath>

#include <Eigen/Core>

namespace covsearch {

using Vec2 = Eigen::Vector2d;

// Wraps an angle to (-pi, pi].
inline double wrap_angle(double a) {
  a = std::fmod(a, 2.0 * M_PI);
  if (a <= -M_PI) a += 2.0 * M_PI;
  if (a > M_PI) a -= 2.0 * M_PI;
  return a;
}

struct Pose {
  double x{0.0};
  double y{0.0};
  double theta{0.0};

  Vec2 position() const { return Vec2(x, y); }
};

struct AgentSpec {
  int id{0};
  double v_max{1.0};        // m/s
  double omega_max{1.0};    // rad/s
  double sense_range{1.0};  // half-width of the square FoV, meters

  // Sensing capacity SR = speed * range; the basis of coverage competency.
  double sensing_capacity() const { return v_max * sense_range; }
};

}  // namespace covsearch

#endif  // COVSEARCH_GEOMETRY_HPP_
