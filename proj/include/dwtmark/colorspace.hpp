#pragma once

#include <array>

#include "dwtmark/core.hpp"

namespace dwtmark {

// CCIR 601 (BT.601) full-precision matrices. Forward operates on RGB
// normalized to [0,1]; the inverse below is the exact numeric inverse of the
// forward matrix, pre-scaled by 255 so it maps (Y-16, Cb-128, Cr-128)
// straight back to 8-bit-range RGB.
inline constexpr std::array<std::array<double, 3>, 3> kRgbToYCbCr = {{
    {65.481, 128.553, 24.966},
    {-37.797, -74.203, 112.0},
    {112.0, -93.786, -18.214},
}};

inline constexpr std::array<std::array<double, 3>, 3> kYCbCrToRgb255 = {{
    {1.1643835616438356, 3.0112439743723866e-07, 1.5960268873357040},
    {1.1643835616438356, -0.39176253994145006, -0.81296829216220525},
    {1.1643835616438356, 2.0172326395564592, 3.0542617454348492e-06},
}};

inline constexpr std::array<double, 3> kYCbCrOffset = {16.0, 128.0, 128.0};

inline YCbCrImage rgb_to_ycbcr(const RgbImage& image) {
    YCbCrImage out(image.width, image.height);
    const auto& m = kRgbToYCbCr;
    for (std::size_t i = 0; i < image.r.size(); ++i) {
        const double r = image.r.samples()[i] / 255.0;
        const double g = image.g.samples()[i] / 255.0;
        const double b = image.b.samples()[i] / 255.0;
        out.y.samples()[i] = kYCbCrOffset[0] + m[0][0] * r + m[0][1] * g + m[0][2] * b;
        out.cb.samples()[i] = kYCbCrOffset[1] + m[1][0] * r + m[1][1] * g + m[1][2] * b;
        out.cr.samples()[i] = kYCbCrOffset[2] + m[2][0] * r + m[2][1] * g + m[2][2] * b;
    }
    return out;
}

inline RgbImage ycbcr_to_rgb(const YCbCrImage& image) {
    RgbImage out(image.width, image.height);
    const auto& m = kYCbCrToRgb255;
    for (std::size_t i = 0; i < image.y.size(); ++i) {
        const double y = image.y.samples()[i] - kYCbCrOffset[0];
        const double cb = image.cb.samples()[i] - kYCbCrOffset[1];
        const double cr = image.cr.samples()[i] - kYCbCrOffset[2];
        out.r.samples()[i] = clamp_to_byte(m[0][0] * y + m[0][1] * cb + m[0][2] * cr);
        out.g.samples()[i] = clamp_to_byte(m[1][0] * y + m[1][1] * cb + m[1][2] * cr);
        out.b.samples()[i] = clamp_to_byte(m[2][0] * y + m[2][1] * cb + m[2][2] * cr);
    }
    return out;
}

}  // namespace dwtmark
