#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "twtri/types.hpp"

namespace twtri {

// Graph file format:
//   c <free text>        comment, ignored
//   p <n> <m>            header, exactly once, before any edge
//   e <u> <v>            m edge lines, 1-based ids
// Self-loops and out-of-range endpoints are rejected. Repeated or reversed
// pairs are accepted here and deduplicated by the consumers.
EdgeList parse_graph(std::string_view text);
std::string serialize_graph(const EdgeList& g);

EdgeList read_graph_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);
std::string read_text_file(const std::filesystem::path& path);

namespace detail {

// Splits on ASCII whitespace.
std::vector<std::string_view> split_tokens(std::string_view line);

// Strict base-10 parse of a non-negative integer token.
bool parse_uint(std::string_view token, std::uint64_t& out);

}  // namespace detail

}  // namespace twtri
