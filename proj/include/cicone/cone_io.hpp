/**
 * Plain-text interchange formats for cones: a homogeneous inequality file and
 * a ray file. Both share the same layout: a first line "DIM d", then one
 * vector of d space-separated integers per line. Lines starting with '#' and
 * blank lines are ignored. Writers emit canonical, byte-reproducible output.
 */
#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "cone.hpp"

namespace cicone {

struct ParseError : std::runtime_error {
    std::size_t line;
    ParseError(std::size_t line_no, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + what), line(line_no)
    {
    }
};

namespace detail {

inline bool significant(const std::string& s)
{
    const std::size_t i = s.find_first_not_of(" \t\r");
    return i != std::string::npos && s[i] != '#';
}

inline std::pair<std::size_t, std::vector<IntVec>> read_vector_file(std::istream& in)
{
    std::string line;
    std::size_t line_no = 0;
    std::size_t dim = 0;
    bool have_dim = false;
    std::vector<IntVec> rows;
    while (std::getline(in, line)) {
        ++line_no;
        if (!significant(line)) continue;
        std::istringstream ss(line);
        if (!have_dim) {
            std::string kw;
            long long d = 0;
            if (!(ss >> kw >> d) || kw != "DIM" || d <= 0)
                throw ParseError(line_no, "expected header 'DIM d' with positive d");
            dim = static_cast<std::size_t>(d);
            have_dim = true;
            continue;
        }
        IntVec v(dim);
        for (std::size_t j = 0; j < dim; ++j) {
            if (!(ss >> v[j]))
                throw ParseError(line_no, "expected " + std::to_string(dim) + " integers");
        }
        std::string rest;
        if (ss >> rest) throw ParseError(line_no, "trailing token '" + rest + "'");
        if (is_zero(v)) throw ParseError(line_no, "zero vector is not a valid ray or normal");
        rows.push_back(std::move(v));
    }
    if (!have_dim) throw ParseError(line_no, "missing 'DIM d' header");
    return {dim, std::move(rows)};
}

inline void write_vector_file(std::ostream& out, std::size_t dim, const std::vector<IntVec>& rows)
{
    out << "DIM " << dim << "\n";
    for (const IntVec& v : rows) {
        for (std::size_t j = 0; j < dim; ++j) {
            if (j) out << ' ';
            out << v[j];
        }
        out << "\n";
    }
}

}  // namespace detail

inline std::pair<std::size_t, std::vector<Halfspace>> read_halfspaces(std::istream& in)
{
    auto [dim, rows] = detail::read_vector_file(in);
    std::vector<Halfspace> hs;
    hs.reserve(rows.size());
    for (IntVec& r : rows) hs.push_back(Halfspace(std::move(r)));
    return {dim, std::move(hs)};
}

inline std::pair<std::size_t, std::vector<Ray>> read_rays(std::istream& in)
{
    auto [dim, rows] = detail::read_vector_file(in);
    std::vector<Ray> rays;
    rays.reserve(rows.size());
    for (IntVec& r : rows) rays.push_back(Ray(std::move(r)));
    return {dim, std::move(rays)};
}

inline void write_halfspaces(std::ostream& out, std::size_t dim, const std::vector<Halfspace>& hs)
{
    std::vector<IntVec> rows;
    rows.reserve(hs.size());
    for (const Halfspace& h : hs) rows.push_back(h.normal);
    detail::write_vector_file(out, dim, rows);
}

inline void write_rays(std::ostream& out, std::size_t dim, const std::vector<Ray>& rays)
{
    std::vector<IntVec> rows;
    rows.reserve(rays.size());
    for (const Ray& r : rays) rows.push_back(r.v);
    detail::write_vector_file(out, dim, rows);
}

}  // namespace cicone
