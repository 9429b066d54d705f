#pragma once

#include "tvw/rational.hpp"

#include <vector>

namespace tvw {

struct Point2 {
    Rat x, y;

    friend bool operator==(const Point2& a, const Point2& b) {
        return a.x == b.x && a.y == b.y;
    }
    friend bool operator!=(const Point2& a, const Point2& b) { return !(a == b); }
    friend bool operator<(const Point2& a, const Point2& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    }
    friend Point2 operator+(const Point2& a, const Point2& b) { return {a.x + b.x, a.y + b.y}; }
    friend Point2 operator-(const Point2& a, const Point2& b) { return {a.x - b.x, a.y - b.y}; }
    friend Point2 operator*(const Rat& s, const Point2& p) { return {s * p.x, s * p.y}; }
};

inline Rat cross(const Point2& a, const Point2& b) { return a.x * b.y - a.y * b.x; }
inline Rat dot(const Point2& a, const Point2& b) { return a.x * b.x + a.y * b.y; }

// A point of R^d as d exact coordinates.
using PointD = std::vector<Rat>;

} // namespace tvw
