#include "tipforge/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace tipforge {

namespace {

std::string fmt(const char* spec, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

std::string escape_xml(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string spectrum_svg(const ComplexSpectrum<double>& spectrum, const std::string& title) {
    constexpr double size = 480;
    constexpr double margin = 40;
    double extent = 1.25;
    for (const auto& z : spectrum) extent = std::max({extent, 1.1 * std::abs(z.real()), 1.1 * std::abs(z.imag())});
    const double scale = (size / 2 - margin) / extent;
    const double c = size / 2;
    auto px = [&](double re) { return fmt("%.3f", c + re * scale); };
    auto py = [&](double im) { return fmt("%.3f", c - im * scale); };

    std::string s;
    s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"480\" height=\"480\" "
         "viewBox=\"0 0 480 480\">\n";
    s += "  <title>" + escape_xml(title) + "</title>\n";
    s += "  <rect x=\"0\" y=\"0\" width=\"480\" height=\"480\" fill=\"white\"/>\n";
    s += "  <line class=\"axis\" x1=\"" + fmt("%.3f", margin / 2) + "\" y1=\"" + py(0) + "\" x2=\"" +
         fmt("%.3f", size - margin / 2) + "\" y2=\"" + py(0) + "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    s += "  <line class=\"axis\" x1=\"" + px(0) + "\" y1=\"" + fmt("%.3f", margin / 2) + "\" x2=\"" + px(0) +
         "\" y2=\"" + fmt("%.3f", size - margin / 2) + "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    s += "  <circle class=\"guide\" cx=\"" + px(0) + "\" cy=\"" + py(0) + "\" r=\"" + fmt("%.3f", scale) +
         "\" fill=\"none\" stroke=\"gray\" stroke-dasharray=\"4 3\"/>\n";
    s += "  <text x=\"" + fmt("%.3f", size - margin / 2) + "\" y=\"" + fmt("%.3f", c - 6) +
         "\" font-size=\"12\" text-anchor=\"end\">Re</text>\n";
    s += "  <text x=\"" + fmt("%.3f", c + 6) + "\" y=\"" + fmt("%.3f", margin / 2 + 12) +
         "\" font-size=\"12\">Im</text>\n";
    s += "  <text x=\"" + fmt("%.3f", margin / 2) + "\" y=\"16\" font-size=\"12\">" +
         escape_xml("extent " + fmt("%.3f", extent)) + "</text>\n";
    for (const auto& z : spectrum)
        s += "  <circle class=\"marker\" cx=\"" + px(z.real()) + "\" cy=\"" + py(z.imag()) +
             "\" r=\"4\" fill=\"steelblue\" stroke=\"navy\"/>\n";
    s += "</svg>\n";
    return s;
}

std::string spectrum_csv(const ComplexSpectrum<double>& spectrum) {
    std::string s = "re,im\r\n";
    for (const auto& z : spectrum) s += fmt("%.17g", z.real()) + "," + fmt("%.17g", z.imag()) + "\r\n";
    return s;
}

}  // namespace tipforge
