package org.example.toy;

/** Counts things. */
public class Counter {
    private int hits;

    /** Sums the first {@code n} odd numbers. */
    public int oddSum(int n) {
        int sum = 0;
        int odd = 1;
        for (int i = 0; i < n; i++) {
            sum = sum + odd;
            odd = odd + 2;
        }
        return sum;
    }

    public void hit() {
        hits++;
    }

    public int negated() {
        return -hits;
    }

    public int countdown(int from) {
        int steps = 0;
        while (from > 0) { from--; steps++; }
        return steps;
    }
}
