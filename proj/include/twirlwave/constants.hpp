#pragma once

#include <cmath>
#include <numbers>
#include <string>
#include <string_view>

#include "twirlwave/errors.hpp"

namespace twirlwave {

inline constexpr double pi = std::numbers::pi;
inline constexpr double four_pi = 4.0 * std::numbers::pi;
inline constexpr double eight_pi = 8.0 * std::numbers::pi;

enum class UnitSystem { natural, gaussian };

[[nodiscard]] inline std::string_view to_string(UnitSystem u) {
  return u == UnitSystem::natural ? "natural" : "gaussian";
}

[[nodiscard]] inline UnitSystem parse_unit_system(std::string_view s) {
  if (s == "natural") return UnitSystem::natural;
  if (s == "gaussian") return UnitSystem::gaussian;
  throw invalid_input("unknown unit system '" + std::string(s) + "'");
}

/// Physical constants of the chosen unit system. In natural units
/// hbar = c = m_e = 1; the Gaussian set is CGS (erg s, cm/s, g, statC).
/// Both systems keep the 4 pi factors of the field formulas as written.
struct PhysicalConstants {
  double hbar = 1.0;
  double c = 1.0;
  double m_e = 1.0;
  double e_charge = 1.0;
  UnitSystem unit_system = UnitSystem::natural;

  [[nodiscard]] static constexpr PhysicalConstants natural() { return {}; }

  [[nodiscard]] static constexpr PhysicalConstants gaussian() {
    return {1.054571817e-27, 2.99792458e10, 9.1093837015e-28, 4.80320471e-10,
            UnitSystem::gaussian};
  }

  [[nodiscard]] static PhysicalConstants of(UnitSystem u) {
    return u == UnitSystem::natural ? natural() : gaussian();
  }

  /// Reduced Compton wavelength hbar/(m c) for mass m.
  [[nodiscard]] double compton_wavelength(double m) const { return hbar / (m * c); }

  /// Rest-energy frequency m c^2 / hbar, i.e. c / r_C.
  [[nodiscard]] double mass_frequency(double m) const { return m * c * c / hbar; }

  void validate() const {
    if (!(hbar > 0.0) || !(c > 0.0) || !(m_e > 0.0) || !(e_charge > 0.0) ||
        !std::isfinite(hbar) || !std::isfinite(c) || !std::isfinite(m_e) ||
        !std::isfinite(e_charge))
      throw invalid_input("physical constants must be finite and strictly positive");
    if (unit_system == UnitSystem::natural && (hbar != 1.0 || c != 1.0 || m_e != 1.0))
      throw invalid_input("natural units require hbar = c = m_e = 1");
  }
};

}  // namespace twirlwave
