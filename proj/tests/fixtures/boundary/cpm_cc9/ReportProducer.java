package fixtures.boundary.cpm_cc9;

import javax.enterprise.inject.Produces;

public class ReportProducer {
    // decision points: if, for, if, &&, while, catch, ||, ?: -> CC 9
    @Produces
    public Report report(Input in) {
        Report r = new Report();
        if (in == null) {
            return r;
        }
        for (int i = 0; i < in.size(); i++) {
            if (in.get(i) > 0 && in.ok(i)) {
                r.add(in.get(i));
            }
        }
        while (r.size() > 10) {
            r.trim();
        }
        try {
            r.seal();
        } catch (IllegalStateException e) {
            r.reset();
        }
        return r.isEmpty() || in.flag() ? r : r.copy();
    }
}
