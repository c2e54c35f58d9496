//! Contact-series segmentation shared by training metrics and analysis.

/// One maximal run of equal contact state.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ContactRun {
    pub in_contact: bool,
    /// Index of the first sample of the run.
    pub start: usize,
    /// Number of samples in the run.
    pub len: usize,
    /// A run touching either end of the series is incomplete: its true
    /// duration was not fully observed.
    pub complete: bool,
}

/// Splits a boolean contact series into maximal runs.
pub fn contact_runs(series: &[bool]) -> Vec<ContactRun> {
    let mut runs = Vec::new();
    let mut start = 0;
    for i in 1..=series.len() {
        if i == series.len() || series[i] != series[start] {
            runs.push(ContactRun {
                in_contact: series[start],
                start,
                len: i - start,
                complete: start > 0 && i < series.len(),
            });
            start = i;
        }
    }
    runs
}

/// Removes contact chatter: interior runs shorter than `min_len` samples
/// are merged into their neighbors, shortest first, until none remain.
/// Runs touching the series boundary are left alone (their true length is
/// unknown).
pub fn debounce_contacts(series: &[bool], min_len: usize) -> Vec<bool> {
    let mut out = series.to_vec();
    if min_len < 2 || out.len() < 3 {
        return out;
    }
    loop {
        let runs = contact_runs(&out);
        let victim = runs
            .iter()
            .filter(|r| r.complete && r.len < min_len)
            .min_by_key(|r| (r.len, r.start));
        match victim {
            None => return out,
            Some(r) => {
                for s in &mut out[r.start..r.start + r.len] {
                    *s = !*s;
                }
            }
        }
    }
}
