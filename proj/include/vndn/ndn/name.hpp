#ifndef VNDN_NDN_NAME_HPP
#define VNDN_NDN_NAME_HPP

#include "../util/errors.hpp"
#include "../util/hash.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace vndn {

/// Hierarchical content name: an ordered list of byte-string components.
/// The empty name (URI "/") is valid as a routing prefix that matches all.
class Name {
public:
  Name() = default;

  /// Parse a URI of the form "/comp1/comp2"; "/" yields the empty name.
  /// Empty components ("//") and URIs not starting with '/' are rejected.
  static Name
  parse(std::string_view uri)
  {
    if (uri.empty() || uri[0] != '/') {
      throw ValidationError("name must start with '/': '" + std::string(uri) + "'");
    }
    Name name;
    if (uri.size() == 1) {
      return name; // root
    }
    std::size_t pos = 1;
    while (pos <= uri.size()) {
      std::size_t slash = uri.find('/', pos);
      std::size_t end = (slash == std::string_view::npos) ? uri.size() : slash;
      if (end == pos) {
        throw ValidationError("empty name component in '" + std::string(uri) + "'");
      }
      name.append(std::string(uri.substr(pos, end - pos)));
      if (slash == std::string_view::npos) {
        break;
      }
      pos = slash + 1;
    }
    return name;
  }

  void
  append(std::string component)
  {
    m_encodedLength += 1 + component.size();
    hashMix(component);
    m_comps.push_back(std::move(component));
  }

  std::size_t
  size() const noexcept
  {
    return m_comps.size();
  }

  bool
  empty() const noexcept
  {
    return m_comps.empty();
  }

  const std::string&
  at(std::size_t i) const
  {
    return m_comps.at(i);
  }

  /// Wire length of the name: one length octet plus the bytes, per component.
  std::size_t
  encodedLength() const noexcept
  {
    return m_encodedLength;
  }

  bool
  isPrefixOf(const Name& other) const noexcept
  {
    if (m_comps.size() > other.m_comps.size()) {
      return false;
    }
    for (std::size_t i = 0; i < m_comps.size(); ++i) {
      if (m_comps[i] != other.m_comps[i]) {
        return false;
      }
    }
    return true;
  }

  std::string
  toUri() const
  {
    if (m_comps.empty()) {
      return "/";
    }
    std::string uri;
    uri.reserve(m_encodedLength);
    for (const auto& c : m_comps) {
      uri += '/';
      uri += c;
    }
    return uri;
  }

  std::uint64_t
  hash() const noexcept
  {
    return m_hash;
  }

  friend bool
  operator==(const Name& a, const Name& b) noexcept
  {
    return a.m_hash == b.m_hash && a.m_comps == b.m_comps;
  }

  friend bool
  operator!=(const Name& a, const Name& b) noexcept
  {
    return !(a == b);
  }

private:
  void
  hashMix(const std::string& component) noexcept
  {
    std::uint64_t h = m_hash;
    for (unsigned char c : component) {
      h = (h ^ c) * 0x100000001b3ULL;
    }
    h = (h ^ 0xff) * 0x100000001b3ULL; // component separator
    m_hash = h;
  }

  std::vector<std::string> m_comps;
  std::size_t m_encodedLength = 0;
  std::uint64_t m_hash = 0xcbf29ce484222325ULL;
};

struct NameHash {
  std::size_t
  operator()(const Name& n) const noexcept
  {
    return static_cast<std::size_t>(n.hash());
  }
};

} // namespace vndn

#endif // VNDN_NDN_NAME_HPP
