use super::Map;

/// Isomorphism invariant of a map, identifying mirror images.
///
/// For every anchor flag and both modes the flags are renumbered in
/// breadth-first order under `α, β, P, P⁻¹` (with `P` and `P⁻¹` swapped in
/// reversing mode), and the relabelled `α, β, P` are read off flag by flag.
/// The least such trace wins. Encoding: flag count as big-endian `u32`, then
/// the trace with 1, 2 or 4 bytes per entry depending on the flag count.
pub fn canonical_form(m: &Map) -> Vec<u8> {
    let n = m.len();
    let p = m.rotation();
    let pinv = p.inverse();
    let unset = u32::MAX;

    let mut best: Vec<u32> = Vec::new();
    let mut label = vec![unset; n];
    let mut order: Vec<usize> = Vec::with_capacity(n);
    let mut trace: Vec<u32> = Vec::with_capacity(3 * n);

    for reversing in [false, true] {
        let (fwd, back) = if reversing { (&pinv, p) } else { (p, &pinv) };
        let gens = [m.alpha(), m.beta(), fwd, back];
        for anchor in 0..n {
            for &x in &order {
                label[x] = unset;
            }
            order.clear();
            trace.clear();
            label[anchor] = 0;
            order.push(anchor);

            let mut better = best.is_empty();
            let mut head = 0;
            'walk: while head < order.len() {
                let x = order[head];
                head += 1;
                for g in &gens {
                    let y = g.apply(x);
                    if label[y] == unset {
                        label[y] = order.len() as u32;
                        order.push(y);
                    }
                }
                for g in &gens[..3] {
                    let v = label[g.apply(x)];
                    if !better {
                        let b = best[trace.len()];
                        if v > b {
                            break 'walk;
                        }
                        better = v < b;
                    }
                    trace.push(v);
                }
            }
            if trace.len() == 3 * n && (better || best.is_empty()) {
                std::mem::swap(&mut best, &mut trace);
            }
        }
    }
    encode(n, &best)
}

fn encode(n: usize, trace: &[u32]) -> Vec<u8> {
    let width = if n <= 1 << 8 {
        1
    } else if n <= 1 << 16 {
        2
    } else {
        4
    };
    let mut out = Vec::with_capacity(4 + width * trace.len());
    out.extend_from_slice(&(n as u32).to_be_bytes());
    for &v in trace {
        out.extend_from_slice(&v.to_be_bytes()[4 - width..]);
    }
    out
}
