#pragma once

#include <tropcount/crossratio_mult.hpp>
#include <tropcount/instance.hpp>
#include <tropcount/stable_map.hpp>

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tropcount::io {

inline constexpr std::string_view instance_schema = "tropcount/instance/1";
inline constexpr std::string_view profile_schema = "tropcount/profile/1";
inline constexpr std::string_view map_schema = "tropcount/map/1";

// Carries "source:line:column: message" for syntax errors and
// "source: field 'path': message" for schema errors.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::filesystem::path& path);

Instance parse_instance(std::string_view text, const std::string& source = "<input>");
VertexProfile parse_profile(std::string_view text, const std::string& source = "<input>");
StableMap parse_map(std::string_view text, const std::string& source = "<input>");

Instance load_instance(const std::filesystem::path& path);
VertexProfile load_profile(const std::filesystem::path& path);
StableMap load_map(const std::filesystem::path& path);

std::string write_instance(const Instance& inst);

}  // namespace tropcount::io
