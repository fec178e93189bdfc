#pragma once

#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <string>

namespace nslab {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Uniform periodic grid on the box [0, 2*pi)^3.
/// Sample layout is x1-fastest: linear index = i1 + n1*(i2 + n2*i3).
struct Grid3 {
    int n1 = 0;
    int n2 = 0;
    int n3 = 0;

    Grid3() = default;
    Grid3(int n1_, int n2_, int n3_) : n1(n1_), n2(n2_), n3(n3_) {
        validate_axis(n1, "n1");
        validate_axis(n2, "n2");
        validate_axis(n3, "n3");
    }
    explicit Grid3(int n) : Grid3(n, n, n) {}

    double h1() const { return kTwoPi / n1; }
    double h2() const { return kTwoPi / n2; }
    double h3() const { return kTwoPi / n3; }
    double cell_volume() const { return h1() * h2() * h3(); }
    double min_spacing() const { return kTwoPi / std::max(n1, std::max(n2, n3)); }

    double x1(int i) const { return h1() * i; }
    double x2(int i) const { return h2() * i; }
    double x3(int i) const { return h3() * i; }

    std::size_t size() const {
        return static_cast<std::size_t>(n1) * static_cast<std::size_t>(n2) *
               static_cast<std::size_t>(n3);
    }
    std::size_t index(int i1, int i2, int i3) const {
        return static_cast<std::size_t>(i1) +
               static_cast<std::size_t>(n1) *
                   (static_cast<std::size_t>(i2) + static_cast<std::size_t>(n2) * i3);
    }

    bool operator==(const Grid3&) const = default;

private:
    static void validate_axis(int n, const char* name) {
        if (n < 4 || n % 2 != 0) {
            throw std::invalid_argument(std::string("Grid3: ") + name +
                                        " must be an even integer >= 4, got " +
                                        std::to_string(n));
        }
    }
};

}  // namespace nslab
