package org.example.toy;

/** Frame of the toy interpreter. */
public class Frame {
	public int fp;

	public void run() {
		fp = fp + 2;
	}
}
