#include "lanewatch/image.hpp"

#include <cmath>
#include <fstream>
#include <string>

namespace lanewatch {

GrayImage gray_from_rgb(const std::uint8_t* rgb, int width, int height) {
    GrayImage out(width, height);
    const std::size_t n = static_cast<std::size_t>(width) * height;
    for (std::size_t i = 0; i < n; ++i) {
        const double y = 0.299 * rgb[3 * i] + 0.587 * rgb[3 * i + 1] +
                         0.114 * rgb[3 * i + 2];
        out.pixels[i] = static_cast<std::uint8_t>(std::lround(y));
    }
    return out;
}

GrayImage load_pgm(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open image: " + path.string());
    std::string magic;
    in >> magic;
    if (magic != "P5") throw InputError("not a binary PGM: " + path.string());
    auto next_token = [&in, &path]() {
        std::string tok;
        while (in >> tok) {
            if (tok[0] == '#') {
                std::string rest;
                std::getline(in, rest);
                continue;
            }
            return tok;
        }
        throw InputError("truncated PGM header: " + path.string());
    };
    const int width = std::stoi(next_token());
    const int height = std::stoi(next_token());
    const int maxval = std::stoi(next_token());
    if (width <= 0 || height <= 0 || maxval != 255)
        throw InputError("unsupported PGM geometry: " + path.string());
    in.get();  // single whitespace after maxval
    GrayImage img(width, height);
    in.read(reinterpret_cast<char*>(img.pixels.data()),
            static_cast<std::streamsize>(img.pixels.size()));
    if (in.gcount() != static_cast<std::streamsize>(img.pixels.size()))
        throw InputError("truncated PGM data: " + path.string());
    return img;
}

void save_pgm(const GrayImage& img, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write image: " + path.string());
    out << "P5\n" << img.width << " " << img.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(img.pixels.data()),
              static_cast<std::streamsize>(img.pixels.size()));
}

}  // namespace lanewatch
