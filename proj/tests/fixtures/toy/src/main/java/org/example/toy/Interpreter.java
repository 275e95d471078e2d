package org.example.toy;

/** Runs frames and keeps the frame pointer. */
public class Interpreter {
	private int fp;
	private int errors;

	/**
	 * Leaves the current frame, whatever happens while running it.
	 */
	public void leave(Frame tinter) {
		try {
			tinter.run();
		} catch (IllegalStateException e) {
			log(e);
		} catch (IllegalArgumentException e) {
			log(e);
		} catch (UnsupportedOperationException e) {
			log(e);
		} catch (ArithmeticException e) {
			log(e);
		} finally {
			fp = tinter.fp - 1;
		}
	}

	void log(RuntimeException e) {
		errors++;
	}

	public int depth() {
		return fp;
	}
}
