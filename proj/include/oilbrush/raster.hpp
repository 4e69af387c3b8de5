#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace oilbrush {

// Row-major 2-D pixel container. at() is bounds-checked; operator() is the
// unchecked fast path for inner loops that have already validated indices.
template <typename T>
class Raster {
public:
    Raster() = default;

    Raster(int width, int height, T fill = T{})
        : width_(width),
          height_(height),
          data_(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), fill) {
        if (width < 1 || height < 1)
            throw std::invalid_argument("Raster dimensions must be >= 1");
    }

    int width() const { return width_; }
    int height() const { return height_; }
    std::size_t size() const { return data_.size(); }

    bool in_bounds(int x, int y) const {
        return x >= 0 && x < width_ && y >= 0 && y < height_;
    }

    T& at(int x, int y) {
        check(x, y);
        return data_[index(x, y)];
    }
    const T& at(int x, int y) const {
        check(x, y);
        return data_[index(x, y)];
    }

    T& operator()(int x, int y) { return data_[index(x, y)]; }
    const T& operator()(int x, int y) const { return data_[index(x, y)]; }

    // Edge-replicated read, used by the filters for border handling.
    const T& clamped(int x, int y) const {
        x = std::clamp(x, 0, width_ - 1);
        y = std::clamp(y, 0, height_ - 1);
        return data_[index(x, y)];
    }

    std::vector<T>& pixels() { return data_; }
    const std::vector<T>& pixels() const { return data_; }

    void fill(const T& v) { std::fill(data_.begin(), data_.end(), v); }

private:
    std::size_t index(int x, int y) const {
        return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
               static_cast<std::size_t>(x);
    }
    void check(int x, int y) const {
        if (!in_bounds(x, y))
            throw std::out_of_range("Raster access out of range");
    }

    int width_ = 0;
    int height_ = 0;
    std::vector<T> data_;
};

struct Rgb8 {
    std::uint8_t r = 0;
    std::uint8_t g = 0;
    std::uint8_t b = 0;
    bool operator==(const Rgb8&) const = default;
};

using GrayF = Raster<double>;
using Mask = Raster<std::uint8_t>;

}  // namespace oilbrush
