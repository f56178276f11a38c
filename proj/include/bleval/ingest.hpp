// Parsing of PAGE XML and plain-text baseline files, plus GT/HY list
// pairing. Parsers are strict: malformed input is a hard error, never a
// silently dropped line.
#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bleval/model.hpp"

namespace bleval {

enum class BaselineFormat { page_xml, plain };

/// Side observations from a parse that are not errors.
struct ParseStats {
    std::size_t textlines_without_baseline = 0;
};

/// Extracts one chain per Baseline element, in document order. Elements
/// are matched by local name, so any PAGE namespace version is
/// accepted. TextLine elements without a Baseline child are skipped and
/// counted in stats. Throws std::runtime_error (with line context) on
/// malformed XML, malformed points tokens or negative coordinates.
std::vector<PolyChain> parse_page_xml(std::string_view document_text,
                                      ParseStats* stats = nullptr);

/// Plain-text fallback: one baseline per line as ";"-joined "x,y"
/// pairs. Blank lines and lines starting with '#' are ignored; CRLF is
/// accepted. Throws std::runtime_error with the offending line number.
std::vector<PolyChain> parse_plain(std::string_view document_text);

/// Serializes chains to the plain-text format (LF line endings).
/// parse_plain(to_plain(chains)) == chains.
std::string to_plain(const std::vector<PolyChain>& chains);

/// Chooses the parser from the file extension: ".xml" -> PAGE XML,
/// ".txt" -> plain. Throws std::runtime_error for anything else.
BaselineFormat detect_format(const std::filesystem::path& path);

/// Reads and parses one baseline file; errors gain the file name.
std::vector<PolyChain> read_baseline_file(const std::filesystem::path& path,
                                          BaselineFormat format,
                                          ParseStats* stats = nullptr);

/// Ordered (gt_path, hyp_path) pairs built from two list files.
struct FilePairList {
    std::vector<std::pair<std::filesystem::path, std::filesystem::path>> pairs;
};

/// Pairs line i of the GT list with line i of the HY list. Blank lines
/// are skipped on each side; relative entries resolve against the list
/// file's directory; every referenced file must exist. Throws
/// std::runtime_error on differing effective line counts ("count
/// mismatch A vs B") or missing files.
FilePairList load_pairs(const std::filesystem::path& gt_list_path,
                        const std::filesystem::path& hyp_list_path);

}  // namespace bleval
