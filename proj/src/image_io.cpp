#include "oilbrush/image_io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <filesystem>

#include <opencv2/imgcodecs.hpp>

namespace oilbrush {

namespace {

std::string lower_extension(const std::string& path) {
    std::string ext = std::filesystem::path(path).extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return ext;
}

void require_readable(const std::string& path) {
    std::error_code ec;
    if (!std::filesystem::exists(path, ec) || ec)
        throw IoError(IoError::Kind::Unreadable, "cannot read input file: " + path);
}

}  // namespace

Raster<Rgb8> load_rgb(const std::string& path) {
    require_readable(path);
    const std::string ext = lower_extension(path);
    if (ext != ".png" && ext != ".jpg" && ext != ".jpeg")
        throw IoError(IoError::Kind::UnsupportedFormat,
                      "unsupported input format (PNG/JPEG only): " + path);

    cv::Mat m = cv::imread(path, cv::IMREAD_COLOR);  // BGR, alpha dropped
    if (m.empty())
        throw IoError(IoError::Kind::UnsupportedFormat, "failed to decode image: " + path);

    Raster<Rgb8> out(m.cols, m.rows);
    for (int y = 0; y < m.rows; ++y) {
        const cv::Vec3b* row = m.ptr<cv::Vec3b>(y);
        for (int x = 0; x < m.cols; ++x)
            out(x, y) = {row[x][2], row[x][1], row[x][0]};
    }
    return out;
}

void load_gray_alpha(const std::string& path, Raster<std::uint8_t>& gray,
                     Raster<std::uint8_t>& alpha) {
    require_readable(path);
    cv::Mat m = cv::imread(path, cv::IMREAD_UNCHANGED);
    if (m.empty())
        throw IoError(IoError::Kind::UnsupportedFormat, "failed to decode image: " + path);

    gray = Raster<std::uint8_t>(m.cols, m.rows);
    alpha = Raster<std::uint8_t>(m.cols, m.rows);
    for (int y = 0; y < m.rows; ++y) {
        for (int x = 0; x < m.cols; ++x) {
            switch (m.channels()) {
                case 1: {
                    gray(x, y) = m.at<std::uint8_t>(y, x);
                    alpha(x, y) = 255;
                    break;
                }
                case 2: {
                    const auto px = m.at<cv::Vec2b>(y, x);
                    gray(x, y) = px[0];
                    alpha(x, y) = px[1];
                    break;
                }
                case 3: {
                    const auto px = m.at<cv::Vec3b>(y, x);
                    gray(x, y) = static_cast<std::uint8_t>(
                        std::lround(0.299 * px[2] + 0.587 * px[1] + 0.114 * px[0]));
                    alpha(x, y) = 255;
                    break;
                }
                case 4: {
                    const auto px = m.at<cv::Vec4b>(y, x);
                    gray(x, y) = static_cast<std::uint8_t>(
                        std::lround(0.299 * px[2] + 0.587 * px[1] + 0.114 * px[0]));
                    alpha(x, y) = px[3];
                    break;
                }
                default:
                    throw IoError(IoError::Kind::UnsupportedFormat,
                                  "unsupported channel count in template: " + path);
            }
        }
    }
}

void save_png(const std::string& path, const Raster<Rgb8>& img) {
    cv::Mat m(img.height(), img.width(), CV_8UC3);
    for (int y = 0; y < img.height(); ++y) {
        cv::Vec3b* row = m.ptr<cv::Vec3b>(y);
        for (int x = 0; x < img.width(); ++x) {
            const Rgb8& c = img(x, y);
            row[x] = {c.b, c.g, c.r};
        }
    }
    if (!cv::imwrite(path, m))
        throw IoError(IoError::Kind::WriteFailure, "failed to write PNG: " + path);
}

void save_gray_png(const std::string& path, const Raster<std::uint8_t>& img) {
    cv::Mat m(img.height(), img.width(), CV_8UC1);
    for (int y = 0; y < img.height(); ++y)
        for (int x = 0; x < img.width(); ++x) m.at<std::uint8_t>(y, x) = img(x, y);
    if (!cv::imwrite(path, m))
        throw IoError(IoError::Kind::WriteFailure, "failed to write PNG: " + path);
}

void save_gray_alpha_png(const std::string& path, const Raster<std::uint8_t>& gray,
                         const Raster<std::uint8_t>& alpha) {
    // Stored as BGRA with replicated gray; the loader treats equal channels as gray.
    cv::Mat m(gray.height(), gray.width(), CV_8UC4);
    for (int y = 0; y < gray.height(); ++y)
        for (int x = 0; x < gray.width(); ++x)
            m.at<cv::Vec4b>(y, x) = {gray(x, y), gray(x, y), gray(x, y), alpha(x, y)};
    if (!cv::imwrite(path, m))
        throw IoError(IoError::Kind::WriteFailure, "failed to write PNG: " + path);
}

}  // namespace oilbrush
