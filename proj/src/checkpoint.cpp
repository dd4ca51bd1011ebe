#include "rankgf/checkpoint.hpp"

#include <fstream>
#include <stdexcept>
#include <string>
#include <system_error>

namespace rankgf {

namespace {

constexpr std::string_view key = "last_completed";

} // namespace

void write_checkpoint(const std::filesystem::path& path, const Partition& last_completed)
{
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out)
            throw std::runtime_error("cannot write checkpoint " + tmp.string());
        out << key << " = " << last_completed.to_string() << '\n';
        out.flush();
        if (!out)
            throw std::runtime_error("cannot write checkpoint " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec)
        throw std::runtime_error("cannot replace checkpoint " + path.string() + ": " + ec.message());
}

std::optional<Partition> read_checkpoint(const std::filesystem::path& path)
{
    std::error_code ec;
    if (!std::filesystem::exists(path, ec))
        return std::nullopt;
    std::ifstream in(path);
    std::string line;
    if (!in || !std::getline(in, line))
        throw std::runtime_error("unreadable checkpoint " + path.string());

    const auto eq = line.find('=');
    auto trim = [](std::string s) {
        const auto b = s.find_first_not_of(" \t\r");
        const auto e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
    };
    if (eq == std::string::npos || trim(line.substr(0, eq)) != key)
        throw std::runtime_error("malformed checkpoint " + path.string());
    try {
        return parse_partition(trim(line.substr(eq + 1)));
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error("malformed checkpoint " + path.string() + ": " + e.what());
    }
}

} // namespace rankgf
