#pragma once

#include <cmath>
#include <complex>
#include <random>

#include <doctest.h>

#include "concavity/jet.hpp"

inline bool close(concavity::Complex a, concavity::Complex b, double tol) { return std::abs(a - b) <= tol; }

inline void check_jet(const concavity::Jet2& got, concavity::Complex f, concavity::Complex df,
                      concavity::Complex d2f, double tol = 1e-12) {
  CHECK(close(got.f, f, tol));
  CHECK(close(got.df, df, tol));
  CHECK(close(got.d2f, d2f, tol));
}

inline concavity::Complex random_point(std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return std::polar(radius * std::sqrt(u(rng)), 2.0 * M_PI * u(rng));
}
