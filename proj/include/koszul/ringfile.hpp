#pragma once

#include "koszul/koszulness.hpp"

namespace koszul {

// Line-oriented ring description:
//   field: Q | F<p>
//   vars: x y z
//   grading: 1 1 0; 0 0 1        (optional matrix rows; columns grade vars)
//   ideal: x*y; y^2 - x*z        (optional; absent or empty = polynomial ring)
//   filtration: ; a ; a, b       (optional; ';'-separated linear-form lists)
//   witnesses: 2 = 1 + b -> 0    (optional; I = J + (x) with colon index)
// '#' starts a comment; a value continues over following lines until the
// next 'key:' line. Parse-then-print is canonical and round-trips.
struct RingFile {
  QuotientRing ring;
  std::optional<KoszulFiltration> filtration;
};

struct RingFileError : std::runtime_error {
  RingFileError(const std::string& msg, std::size_t line, std::size_t col)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(col) + ": " + msg),
        line(line),
        col(col) {}
  std::size_t line, col;  // 1-based
};

RingFile parse_ring_file(const std::string& text);
std::string print_ring_file(const RingFile& rf);

}  // namespace koszul
