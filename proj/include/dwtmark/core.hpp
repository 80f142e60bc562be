#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace dwtmark {

// Unreadable/unwritable/undecodable files.
struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// Violated domain constraints: capacity, dimensions, bounds, invariants.
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// Row-major 2-D sample plane.
template <typename T>
class Plane {
public:
    Plane() = default;
    Plane(int width, int height, T fill = T{})
        : width_(width), height_(height),
          data_(static_cast<std::size_t>(width) * height, fill) {
        if (width <= 0 || height <= 0)
            throw DomainError("plane dimensions must be positive");
    }

    int width() const { return width_; }
    int height() const { return height_; }
    std::size_t size() const { return data_.size(); }

    T& at(int row, int col) { return data_[static_cast<std::size_t>(row) * width_ + col]; }
    const T& at(int row, int col) const {
        return data_[static_cast<std::size_t>(row) * width_ + col];
    }

    std::vector<T>& samples() { return data_; }
    const std::vector<T>& samples() const { return data_; }

    bool same_shape(const Plane& other) const {
        return width_ == other.width_ && height_ == other.height_;
    }

    template <typename U>
    Plane<U> cast() const {
        Plane<U> out(width_, height_);
        for (std::size_t i = 0; i < data_.size(); ++i)
            out.samples()[i] = static_cast<U>(data_[i]);
        return out;
    }

    bool operator==(const Plane& other) const = default;

private:
    int width_ = 0;
    int height_ = 0;
    std::vector<T> data_;
};

using BytePlane = Plane<std::uint8_t>;
using RealPlane = Plane<double>;

// Three 8-bit planes, the host/watermarked/attacked image carrier.
struct RgbImage {
    int width = 0;
    int height = 0;
    BytePlane r, g, b;

    RgbImage() = default;
    RgbImage(int w, int h) : width(w), height(h), r(w, h), g(w, h), b(w, h) {}

    const BytePlane& channel(int i) const { return i == 0 ? r : (i == 1 ? g : b); }
    BytePlane& channel(int i) { return i == 0 ? r : (i == 1 ? g : b); }

    bool operator==(const RgbImage& other) const = default;
};

// Real-valued Y/Cb/Cr planes in BT.601 analog ranges.
struct YCbCrImage {
    int width = 0;
    int height = 0;
    RealPlane y, cb, cr;

    YCbCrImage() = default;
    YCbCrImage(int w, int h) : width(w), height(h), y(w, h), cb(w, h), cr(w, h) {}
};

// Binary watermark payload; at least one bit must be set.
struct WatermarkBits {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> bits;  // row-major, values 0/1

    WatermarkBits() = default;
    WatermarkBits(int w, int h)
        : width(w), height(h), bits(static_cast<std::size_t>(w) * h, 0) {
        if (w <= 0 || h <= 0) throw DomainError("watermark dimensions must be positive");
    }

    std::size_t bit_count() const { return bits.size(); }
    std::uint8_t at(int row, int col) const {
        return bits[static_cast<std::size_t>(row) * width + col];
    }
    void set(int row, int col, std::uint8_t v) {
        bits[static_cast<std::size_t>(row) * width + col] = v ? 1 : 0;
    }

    bool any_set() const {
        for (auto b : bits)
            if (b) return true;
        return false;
    }

    void validate() const {
        if (bits.size() != static_cast<std::size_t>(width) * height)
            throw DomainError("watermark bit count does not match dimensions");
        if (!any_set())
            throw DomainError("watermark has no 1 bits");
    }

    bool operator==(const WatermarkBits& other) const = default;
};

inline double round_half_away(double x) {
    return x >= 0.0 ? std::floor(x + 0.5) : std::ceil(x - 0.5);
}

inline std::uint8_t clamp_to_byte(double x) {
    double r = round_half_away(x);
    if (r <= 0.0) return 0;
    if (r >= 255.0) return 255;
    return static_cast<std::uint8_t>(r);
}

}  // namespace dwtmark
