use crate::bfile::{parse_bfile, BFileSeq};
use crate::error::OeisError;
use std::path::{Path, PathBuf};
use std::time::Duration;

/// Validated OEIS identifier: "A" followed by six digits.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SequenceId(String);

impl SequenceId {
    pub fn parse(s: &str) -> Result<Self, OeisError> {
        let bytes = s.as_bytes();
        let ok = bytes.len() == 7
            && bytes[0] == b'A'
            && bytes[1..].iter().all(|b| b.is_ascii_digit());
        if ok {
            Ok(SequenceId(s.to_string()))
        } else {
            Err(OeisError::InvalidId { id: s.to_string() })
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// Cache file name, e.g. `b036991.txt`.
    pub fn bfile_name(&self) -> String {
        format!("b{}.txt", &self.0[1..])
    }

    /// Retrieval URL, e.g. `https://oeis.org/A036991/b036991.txt`.
    pub fn bfile_url(&self, base: &str) -> String {
        format!("{}/{}/{}", base.trim_end_matches('/'), self.0, self.bfile_name())
    }
}

impl std::fmt::Display for SequenceId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::str::FromStr for SequenceId {
    type Err = OeisError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SequenceId::parse(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FetchMode {
    /// Never touch the network; error on a cache miss.
    CacheOnly,
    /// Retrieve and cache on a miss.
    FetchIfMissing,
}

#[derive(Debug)]
pub struct TransportError {
    pub status: Option<u16>,
    pub message: String,
}

/// Byte-level GET, injectable so tests run without a network.
pub trait Transport: Send + Sync {
    fn get(&self, url: &str) -> Result<Vec<u8>, TransportError>;
}

struct HttpTransport {
    agent: ureq::Agent,
}

impl HttpTransport {
    fn new(timeout: Duration) -> Self {
        let config = ureq::Agent::config_builder()
            .timeout_global(Some(timeout))
            .build();
        HttpTransport {
            agent: ureq::Agent::new_with_config(config),
        }
    }
}

impl Transport for HttpTransport {
    fn get(&self, url: &str) -> Result<Vec<u8>, TransportError> {
        match self.agent.get(url).call() {
            Ok(mut response) => response
                .body_mut()
                .read_to_vec()
                .map_err(|e| TransportError {
                    status: None,
                    message: e.to_string(),
                }),
            Err(ureq::Error::StatusCode(code)) => Err(TransportError {
                status: Some(code),
                message: format!("HTTP status {code}"),
            }),
            Err(e) => Err(TransportError {
                status: None,
                message: e.to_string(),
            }),
        }
    }
}

const DEFAULT_BASE_URL: &str = "https://oeis.org";
const DEFAULT_TIMEOUT: Duration = Duration::from_secs(10);

/// Fetches and caches b-files. Cache writes go through a temp file and an
/// atomic rename, so concurrent fetches of distinct ids are safe.
pub struct OeisClient {
    cache_dir: PathBuf,
    base_url: String,
    transport: Box<dyn Transport>,
}

impl OeisClient {
    pub fn new(cache_dir: impl Into<PathBuf>) -> Self {
        OeisClient {
            cache_dir: cache_dir.into(),
            base_url: DEFAULT_BASE_URL.to_string(),
            transport: Box::new(HttpTransport::new(DEFAULT_TIMEOUT)),
        }
    }

    /// Cache directory from `NATMAT_CACHE_DIR`, else a per-user cache
    /// location.
    pub fn from_env() -> Self {
        OeisClient::new(cache_dir_from_env())
    }

    pub fn with_transport(
        cache_dir: impl Into<PathBuf>,
        base_url: impl Into<String>,
        transport: Box<dyn Transport>,
    ) -> Self {
        OeisClient {
            cache_dir: cache_dir.into(),
            base_url: base_url.into(),
            transport,
        }
    }

    pub fn cache_dir(&self) -> &Path {
        &self.cache_dir
    }

    pub fn cache_path(&self, id: &SequenceId) -> PathBuf {
        self.cache_dir.join(id.bfile_name())
    }

    /// Returns the parsed b-file for `id`, consulting the cache first.
    pub fn fetch_sequence(&self, id: &SequenceId, mode: FetchMode) -> Result<BFileSeq, OeisError> {
        let path = self.cache_path(id);
        if !path.exists() {
            match mode {
                FetchMode::CacheOnly => {
                    return Err(OeisError::NotCached {
                        id: id.to_string(),
                        path,
                    });
                }
                FetchMode::FetchIfMissing => {
                    let url = id.bfile_url(&self.base_url);
                    let bytes =
                        self.transport
                            .get(&url)
                            .map_err(|e| OeisError::FetchFailed {
                                id: id.to_string(),
                                status: e.status,
                                message: e.message,
                            })?;
                    write_atomically(&path, &bytes)?;
                }
            }
        }
        let bytes = std::fs::read(&path)?;
        parse_bfile(id.as_str(), &String::from_utf8_lossy(&bytes))
    }
}

fn cache_dir_from_env() -> PathBuf {
    if let Ok(dir) = std::env::var("NATMAT_CACHE_DIR") {
        return PathBuf::from(dir);
    }
    if let Ok(xdg) = std::env::var("XDG_CACHE_HOME") {
        return Path::new(&xdg).join("natmat/oeis");
    }
    if let Ok(home) = std::env::var("HOME") {
        return Path::new(&home).join(".cache/natmat/oeis");
    }
    PathBuf::from(".natmat-cache/oeis")
}

/// Write-temp-then-rename; readers never observe a partial file and
/// concurrent writers (threads included) never share a temp name.
fn write_atomically(path: &Path, bytes: &[u8]) -> Result<(), OeisError> {
    use std::sync::atomic::{AtomicU64, Ordering};
    static COUNTER: AtomicU64 = AtomicU64::new(0);
    let dir = path.parent().unwrap_or_else(|| Path::new("."));
    std::fs::create_dir_all(dir)?;
    let tmp = dir.join(format!(
        ".{}.tmp-{}-{}",
        path.file_name().and_then(|n| n.to_str()).unwrap_or("bfile"),
        std::process::id(),
        COUNTER.fetch_add(1, Ordering::Relaxed)
    ));
    std::fs::write(&tmp, bytes)?;
    std::fs::rename(&tmp, path)?;
    Ok(())
}
