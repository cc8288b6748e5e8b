#pragma once

namespace ictus::units {

// Compile-time SI dimension tags: kg^M * m^L * s^T * A^I. Mixing dimensions
// fails to compile, which is the "dimensional audit" for the power model.
template <int M, int L, int T, int I>
struct Quantity {
  double value = 0.0;

  constexpr Quantity() = default;
  constexpr explicit Quantity(double v) : value(v) {}

  constexpr Quantity operator+(Quantity o) const { return Quantity{value + o.value}; }
  constexpr Quantity operator-(Quantity o) const { return Quantity{value - o.value}; }
  constexpr Quantity& operator+=(Quantity o) { value += o.value; return *this; }
  constexpr Quantity operator*(double k) const { return Quantity{value * k}; }
  constexpr Quantity operator/(double k) const { return Quantity{value / k}; }
  constexpr bool operator<(Quantity o) const { return value < o.value; }
  constexpr bool operator>(Quantity o) const { return value > o.value; }
  constexpr bool operator==(Quantity o) const { return value == o.value; }
};

template <int M1, int L1, int T1, int I1, int M2, int L2, int T2, int I2>
constexpr Quantity<M1 + M2, L1 + L2, T1 + T2, I1 + I2> operator*(
    Quantity<M1, L1, T1, I1> a, Quantity<M2, L2, T2, I2> b) {
  return Quantity<M1 + M2, L1 + L2, T1 + T2, I1 + I2>{a.value * b.value};
}

template <int M1, int L1, int T1, int I1, int M2, int L2, int T2, int I2>
constexpr Quantity<M1 - M2, L1 - L2, T1 - T2, I1 - I2> operator/(
    Quantity<M1, L1, T1, I1> a, Quantity<M2, L2, T2, I2> b) {
  return Quantity<M1 - M2, L1 - L2, T1 - T2, I1 - I2>{a.value / b.value};
}

template <int M, int L, int T, int I>
constexpr Quantity<M, L, T, I> operator*(double k, Quantity<M, L, T, I> q) {
  return Quantity<M, L, T, I>{k * q.value};
}

using Scalar = Quantity<0, 0, 0, 0>;
using Seconds = Quantity<0, 0, 1, 0>;
using Hertz = Quantity<0, 0, -1, 0>;
using Amps = Quantity<0, 0, 0, 1>;
using Volts = Quantity<1, 2, -3, -1>;
using Ohms = Quantity<1, 2, -3, -2>;
using Watts = Quantity<1, 2, -3, 0>;
using Joules = Quantity<1, 2, -2, 0>;

}  // namespace ictus::units
