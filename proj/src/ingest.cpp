#include "bleval/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace bleval {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what) {
    throw std::runtime_error("line " + std::to_string(line) + ": " + what);
}

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n';
}

int parse_coordinate(std::string_view token, std::size_t line,
                     std::string_view context) {
    int value = 0;
    const auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        fail(line, "non-integer coordinate '" + std::string(token) + "' in " +
                       std::string(context));
    }
    if (value < 0) {
        fail(line, "negative coordinate '" + std::string(token) + "' in " +
                       std::string(context));
    }
    return value;
}

Point parse_point_token(std::string_view token, std::size_t line,
                        std::string_view context) {
    const std::size_t comma = token.find(',');
    if (comma == std::string_view::npos) {
        fail(line, "point token '" + std::string(token) +
                       "' is missing a comma in " + std::string(context));
    }
    if (token.find(',', comma + 1) != std::string_view::npos) {
        fail(line, "point token '" + std::string(token) +
                       "' has too many commas in " + std::string(context));
    }
    return {parse_coordinate(token.substr(0, comma), line, context),
            parse_coordinate(token.substr(comma + 1), line, context)};
}

// "x1,y1 x2,y2 ..." with any whitespace run between pairs.
std::vector<Point> parse_points_attribute(std::string_view value,
                                          std::size_t line) {
    std::vector<Point> points;
    std::size_t pos = 0;
    while (pos < value.size()) {
        while (pos < value.size() && is_space(value[pos])) {
            ++pos;
        }
        if (pos >= value.size()) {
            break;
        }
        std::size_t end = pos;
        while (end < value.size() && !is_space(value[end])) {
            ++end;
        }
        points.push_back(
            parse_point_token(value.substr(pos, end - pos), line, "points attribute"));
        pos = end;
    }
    if (points.empty()) {
        fail(line, "Baseline element has an empty points attribute");
    }
    return points;
}

std::string_view local_name(std::string_view qualified) {
    const std::size_t colon = qualified.rfind(':');
    return colon == std::string_view::npos ? qualified
                                           : qualified.substr(colon + 1);
}

// Minimal well-formedness-checking XML reader: enough for PAGE files
// (elements, attributes, comments, CDATA, prolog, doctype) and strict
// about tag balance. Entity handling covers the five predefined
// entities plus numeric references.
class XmlReader {
public:
    explicit XmlReader(std::string_view text) : text_(text) {}

    struct StackEntry {
        std::string name;       // qualified name, for balance checks
        bool is_textline;
        bool saw_baseline;
    };

    void run(std::vector<PolyChain>& chains, ParseStats& stats) {
        skip_bom();
        while (pos_ < text_.size()) {
            const std::size_t lt = text_.find('<', pos_);
            if (lt == std::string_view::npos) {
                if (stack_.empty() && !only_whitespace_from(pos_)) {
                    fail(line_at(pos_), "text content outside of any element");
                }
                break;  // an unclosed element is reported below
            }
            advance_to(lt);
            if (starts_with("<?")) {
                skip_until("?>", "unterminated processing instruction");
            } else if (starts_with("<!--")) {
                skip_until("-->", "unterminated comment");
            } else if (starts_with("<![CDATA[")) {
                skip_until("]]>", "unterminated CDATA section");
            } else if (starts_with("<!")) {
                skip_doctype();
            } else if (starts_with("</")) {
                close_element(stats);
            } else {
                open_element(chains, stats);
            }
        }
        if (!stack_.empty()) {
            fail(line_at(text_.size()),
                 "unexpected end of document inside <" + stack_.back().name + ">");
        }
        if (!saw_root_) {
            fail(1, "document has no root element");
        }
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;       // line number of pos_
    std::size_t line_pos_ = 0;   // offset the line count is valid for
    std::vector<StackEntry> stack_;
    bool saw_root_ = false;

    std::size_t line_at(std::size_t offset) {
        // Offsets only move forward, so the count is incremental.
        while (line_pos_ < offset && line_pos_ < text_.size()) {
            if (text_[line_pos_] == '\n') {
                ++line_;
            }
            ++line_pos_;
        }
        return line_;
    }

    void advance_to(std::size_t offset) {
        line_at(offset);
        pos_ = offset;
    }

    void skip_bom() {
        if (text_.substr(0, 3) == "\xEF\xBB\xBF") {
            pos_ = 3;
            line_pos_ = 3;
        }
    }

    bool starts_with(std::string_view prefix) const {
        return text_.substr(pos_, prefix.size()) == prefix;
    }

    bool only_whitespace_from(std::size_t offset) const {
        return std::all_of(text_.begin() + offset, text_.end(), is_space);
    }

    void skip_until(std::string_view terminator, const std::string& error) {
        const std::size_t end = text_.find(terminator, pos_);
        if (end == std::string_view::npos) {
            fail(line_at(pos_), error);
        }
        advance_to(end + terminator.size());
    }

    void skip_doctype() {
        std::size_t depth = 0;
        for (std::size_t i = pos_; i < text_.size(); ++i) {
            if (text_[i] == '[') {
                ++depth;
            } else if (text_[i] == ']') {
                if (depth > 0) {
                    --depth;
                }
            } else if (text_[i] == '>' && depth == 0) {
                advance_to(i + 1);
                return;
            }
        }
        fail(line_at(pos_), "unterminated doctype declaration");
    }

    void skip_whitespace() {
        while (pos_ < text_.size() && is_space(text_[pos_])) {
            advance_to(pos_ + 1);
        }
    }

    static bool is_name_char(char c) {
        return !is_space(c) && c != '>' && c != '/' && c != '=' && c != '<' &&
               c != '"' && c != '\'';
    }

    std::string read_name(const std::string& error) {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && is_name_char(text_[pos_])) {
            advance_to(pos_ + 1);
        }
        if (pos_ == start) {
            fail(line_at(start), error);
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    std::string decode_entities(std::string_view raw, std::size_t line) {
        if (raw.find('&') == std::string_view::npos) {
            return std::string(raw);
        }
        std::string out;
        out.reserve(raw.size());
        std::size_t i = 0;
        while (i < raw.size()) {
            if (raw[i] != '&') {
                out += raw[i++];
                continue;
            }
            const std::size_t semi = raw.find(';', i);
            if (semi == std::string_view::npos) {
                fail(line, "unterminated entity reference in attribute value");
            }
            const std::string_view name = raw.substr(i + 1, semi - i - 1);
            if (name == "amp") {
                out += '&';
            } else if (name == "lt") {
                out += '<';
            } else if (name == "gt") {
                out += '>';
            } else if (name == "quot") {
                out += '"';
            } else if (name == "apos") {
                out += '\'';
            } else if (!name.empty() && name[0] == '#') {
                const bool hex = name.size() > 1 && (name[1] == 'x' || name[1] == 'X');
                const std::string digits(name.substr(hex ? 2 : 1));
                unsigned long code = 0;
                try {
                    code = std::stoul(digits, nullptr, hex ? 16 : 10);
                } catch (const std::exception&) {
                    fail(line, "invalid numeric character reference '&" +
                                   std::string(name) + ";'");
                }
                if (code > 0x7F) {
                    fail(line, "non-ASCII character reference in attribute value");
                }
                out += static_cast<char>(code);
            } else {
                fail(line, "unknown entity reference '&" + std::string(name) + ";'");
            }
            i = semi + 1;
        }
        return out;
    }

    // Parses attributes up to (not including) '>' or '/>'.
    std::vector<std::pair<std::string, std::string>> read_attributes() {
        std::vector<std::pair<std::string, std::string>> attrs;
        while (true) {
            skip_whitespace();
            if (pos_ >= text_.size()) {
                fail(line_at(pos_), "unterminated element tag");
            }
            const char c = text_[pos_];
            if (c == '>' || c == '/') {
                return attrs;
            }
            const std::size_t attr_line = line_at(pos_);
            std::string name = read_name("malformed attribute name");
            skip_whitespace();
            if (pos_ >= text_.size() || text_[pos_] != '=') {
                fail(attr_line, "attribute '" + name + "' is missing a value");
            }
            advance_to(pos_ + 1);
            skip_whitespace();
            if (pos_ >= text_.size() ||
                (text_[pos_] != '"' && text_[pos_] != '\'')) {
                fail(attr_line, "attribute '" + name + "' value is not quoted");
            }
            const char quote = text_[pos_];
            advance_to(pos_ + 1);
            const std::size_t value_start = pos_;
            const std::size_t value_end = text_.find(quote, pos_);
            if (value_end == std::string_view::npos) {
                fail(attr_line, "attribute '" + name + "' has an unterminated value");
            }
            advance_to(value_end + 1);
            attrs.emplace_back(std::move(name),
                               decode_entities(text_.substr(value_start,
                                                            value_end - value_start),
                                               attr_line));
        }
    }

    void open_element(std::vector<PolyChain>& chains, ParseStats& stats) {
        const std::size_t tag_line = line_at(pos_);
        advance_to(pos_ + 1);  // consume '<'
        const std::string name = read_name("malformed element name");
        const auto attrs = read_attributes();
        bool self_closing = false;
        if (pos_ < text_.size() && text_[pos_] == '/') {
            self_closing = true;
            advance_to(pos_ + 1);
        }
        if (pos_ >= text_.size() || text_[pos_] != '>') {
            fail(tag_line, "element <" + name + "> is missing '>'");
        }
        advance_to(pos_ + 1);

        if (stack_.empty()) {
            if (saw_root_) {
                fail(tag_line, "multiple root elements");
            }
            saw_root_ = true;
        }

        const std::string_view local = local_name(name);
        if (local == "Baseline") {
            handle_baseline(attrs, tag_line, chains);
        }
        if (self_closing) {
            if (local == "TextLine") {
                ++stats.textlines_without_baseline;
            }
            return;
        }
        stack_.push_back({name, local == "TextLine", false});
    }

    void handle_baseline(
        const std::vector<std::pair<std::string, std::string>>& attrs,
        std::size_t tag_line, std::vector<PolyChain>& chains) {
        const auto it =
            std::find_if(attrs.begin(), attrs.end(),
                         [](const auto& a) { return a.first == "points"; });
        if (it == attrs.end()) {
            fail(tag_line, "Baseline element has no points attribute");
        }
        chains.push_back(PolyChain(parse_points_attribute(it->second, tag_line)));
        // Mark the enclosing TextLine, if any, as carrying a baseline.
        for (auto entry = stack_.rbegin(); entry != stack_.rend(); ++entry) {
            if (entry->is_textline) {
                entry->saw_baseline = true;
                break;
            }
        }
    }

    void close_element(ParseStats& stats) {
        const std::size_t tag_line = line_at(pos_);
        advance_to(pos_ + 2);  // consume '</'
        const std::string name = read_name("malformed closing tag");
        skip_whitespace();
        if (pos_ >= text_.size() || text_[pos_] != '>') {
            fail(tag_line, "closing tag </" + name + "> is missing '>'");
        }
        advance_to(pos_ + 1);
        if (stack_.empty()) {
            fail(tag_line, "closing tag </" + name + "> without open element");
        }
        if (stack_.back().name != name) {
            fail(tag_line, "mismatched closing tag </" + name + ">, expected </" +
                               stack_.back().name + ">");
        }
        if (stack_.back().is_textline && !stack_.back().saw_baseline) {
            ++stats.textlines_without_baseline;
        }
        stack_.pop_back();
    }
};

std::string read_file_text(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open file: " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) {
        throw std::runtime_error("failed reading file: " + path.string());
    }
    return buffer.str();
}

std::vector<std::string> effective_list_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string::npos) {
            end = text.size();
        }
        std::string line = text.substr(pos, end - pos);
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        const auto first = line.find_first_not_of(" \t");
        const auto last = line.find_last_not_of(" \t");
        if (first != std::string::npos) {
            lines.push_back(line.substr(first, last - first + 1));
        }
        if (end == text.size()) {
            break;
        }
        pos = end + 1;
    }
    return lines;
}

}  // namespace

std::vector<PolyChain> parse_page_xml(std::string_view document_text,
                                      ParseStats* stats) {
    std::vector<PolyChain> chains;
    ParseStats local_stats;
    XmlReader reader(document_text);
    reader.run(chains, local_stats);
    if (stats != nullptr) {
        *stats = local_stats;
    }
    return chains;
}

std::vector<PolyChain> parse_plain(std::string_view document_text) {
    std::vector<PolyChain> chains;
    std::size_t line_number = 0;
    std::size_t pos = 0;
    while (pos <= document_text.size()) {
        ++line_number;
        std::size_t end = document_text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = document_text.size();
        }
        std::string_view line = document_text.substr(pos, end - pos);
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        const std::size_t content = line.find_first_not_of(" \t");
        if (content != std::string_view::npos && line[content] != '#') {
            std::vector<Point> points;
            std::string_view rest = line;
            while (true) {
                const std::size_t semi = rest.find(';');
                const std::string_view token =
                    semi == std::string_view::npos ? rest : rest.substr(0, semi);
                points.push_back(parse_point_token(token, line_number, "baseline"));
                if (semi == std::string_view::npos) {
                    break;
                }
                rest.remove_prefix(semi + 1);
            }
            chains.push_back(PolyChain(std::move(points)));
        }
        if (end == document_text.size()) {
            break;
        }
        pos = end + 1;
    }
    return chains;
}

std::string to_plain(const std::vector<PolyChain>& chains) {
    std::string out;
    for (const PolyChain& chain : chains) {
        bool first = true;
        for (const Point& v : chain.vertices()) {
            if (!first) {
                out += ';';
            }
            out += std::to_string(v.x);
            out += ',';
            out += std::to_string(v.y);
            first = false;
        }
        out += '\n';
    }
    return out;
}

BaselineFormat detect_format(const std::filesystem::path& path) {
    std::string ext = path.extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (ext == ".xml") {
        return BaselineFormat::page_xml;
    }
    if (ext == ".txt") {
        return BaselineFormat::plain;
    }
    throw std::runtime_error("cannot infer baseline format from extension '" +
                             ext + "' of " + path.string() +
                             " (expected .xml or .txt)");
}

std::vector<PolyChain> read_baseline_file(const std::filesystem::path& path,
                                          BaselineFormat format,
                                          ParseStats* stats) {
    const std::string text = read_file_text(path);
    try {
        return format == BaselineFormat::page_xml ? parse_page_xml(text, stats)
                                                  : parse_plain(text);
    } catch (const std::exception& e) {
        throw std::runtime_error(path.string() + ": " + e.what());
    }
}

FilePairList load_pairs(const std::filesystem::path& gt_list_path,
                        const std::filesystem::path& hyp_list_path) {
    const auto gt_lines = effective_list_lines(read_file_text(gt_list_path));
    const auto hyp_lines = effective_list_lines(read_file_text(hyp_list_path));
    if (gt_lines.size() != hyp_lines.size()) {
        throw std::runtime_error(
            "baseline list count mismatch " + std::to_string(gt_lines.size()) +
            " vs " + std::to_string(hyp_lines.size()) + " (" +
            gt_list_path.string() + ", " + hyp_list_path.string() + ")");
    }

    const auto resolve = [](const std::filesystem::path& list_path,
                            const std::string& entry) {
        std::filesystem::path p(entry);
        if (p.is_relative()) {
            p = list_path.parent_path() / p;
        }
        if (!std::filesystem::exists(p)) {
            throw std::runtime_error("referenced file not found: " + p.string() +
                                     " (from " + list_path.string() + ")");
        }
        return p;
    };

    FilePairList list;
    list.pairs.reserve(gt_lines.size());
    for (std::size_t i = 0; i < gt_lines.size(); ++i) {
        list.pairs.emplace_back(resolve(gt_list_path, gt_lines[i]),
                                resolve(hyp_list_path, hyp_lines[i]));
    }
    return list;
}

}  // namespace bleval
