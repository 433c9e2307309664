#pragma once

#include <cmath>
#include <stdexcept>

namespace tdks {

// External field, specified through its vector potential A(t).
//
//   pulse: A(t) = a0 cos(w t) sin^2(w t / (2 n_cycles)) on (0, T), T = 2 pi n_cycles / w
//   kick:  A(t) = -strength for t >= 0, a sudden momentum boost probing linear response
struct Drive {
  enum class Kind { none, pulse, kick };

  Kind kind = Kind::none;
  double amplitude = 0.0;   // a0 (pulse) or kick strength
  double frequency = 0.0;   // carrier, pulse only
  int n_cycles = 0;         // pulse only

  double duration() const {
    return kind == Kind::pulse ? 2.0 * M_PI * n_cycles / frequency : 0.0;
  }

  double vector_potential(double t) const {
    switch (kind) {
      case Kind::none:
        return 0.0;
      case Kind::kick:
        return t >= 0.0 ? -amplitude : 0.0;
      case Kind::pulse: {
        if (t <= 0.0 || t >= duration()) return 0.0;
        double envelope = std::sin(frequency * t / (2.0 * n_cycles));
        return amplitude * std::cos(frequency * t) * envelope * envelope;
      }
    }
    return 0.0;
  }

  void validate() const {
    if (kind == Kind::pulse) {
      if (!(frequency > 0.0)) throw std::invalid_argument("drive: pulse frequency must be positive");
      if (n_cycles < 1) throw std::invalid_argument("drive: pulse needs n_cycles >= 1");
      if (amplitude < 0.0) throw std::invalid_argument("drive: negative amplitude");
    }
    if (kind == Kind::kick && amplitude < 0.0)
      throw std::invalid_argument("drive: negative kick strength");
  }
};

inline Drive make_pulse(double a0, double frequency, int n_cycles) {
  Drive d;
  d.kind = Drive::Kind::pulse;
  d.amplitude = a0;
  d.frequency = frequency;
  d.n_cycles = n_cycles;
  d.validate();
  return d;
}

inline Drive make_kick(double strength) {
  Drive d;
  d.kind = Drive::Kind::kick;
  d.amplitude = strength;
  d.validate();
  return d;
}

}  // namespace tdks
