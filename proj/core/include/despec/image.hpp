#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace despec {

// RGB image with float values in [0, 1], row-major, interleaved channels.
// The universal image currency of the pipeline.
struct RGBImage {
    int height = 0;
    int width = 0;
    std::vector<float> data;  // height * width * 3

    RGBImage() = default;
    RGBImage(int h, int w, float fill = 0.f)
        : height(h), width(w), data(static_cast<std::size_t>(h) * w * 3, fill) {}

    float& at(int y, int x, int c) { return data[(static_cast<std::size_t>(y) * width + x) * 3 + c]; }
    float at(int y, int x, int c) const { return data[(static_cast<std::size_t>(y) * width + x) * 3 + c]; }

    std::size_t pixel_count() const { return static_cast<std::size_t>(height) * width; }
    bool same_shape(const RGBImage& o) const { return height == o.height && width == o.width; }
    void clamp01();
};

// Dichromatic composition: pixel-wise clamp(diffuse + specular, 0, 1).
// Both inputs are expected in [0, 1]; the result is >= diffuse everywhere.
// Throws ShapeError on dimension mismatch.
RGBImage compose_dichromatic(const RGBImage& diffuse, const RGBImage& specular);

// PNG I/O, 8- or 16-bit RGB. Values map linearly to [0, 1].
// load_image rejects non-RGB files (grayscale, palette, alpha).
// If bit_depth is non-null it receives the source depth (8 or 16).
RGBImage load_image(const std::string& path, int* bit_depth = nullptr);
void save_image(const RGBImage& img, const std::string& path, int bit_depth = 16);

}  // namespace despec
